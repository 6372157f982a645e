# 17 significant digits re-parse to the identical double
FLOAT_FORMAT = '%.17g'
