import collections.abc
import datetime
from typing import (  # noqa: F401
    Any,
    Dict,
    Type,
    TypeVar,
)


TRecord = TypeVar('TRecord', bound='Record')


class Record():
    """
    Frozen keyword-constructed record. Subclasses declare ``fields`` (name -> type
    tag) and ``defaults``. Type tags are 'str', 'int', 'float', 'bool', 'date',
    'datetime', 'json', a Record subclass, ``[tag]`` for lists, ``{tag}`` for sets
    and ``('optional', tag)`` for nullable values.
    """
    fields = {}  # type: Dict[str, Any]
    defaults = {}  # type: Dict[str, Any]

    def __init__(self, **kwargs: Any) -> None:
        for k in kwargs:
            assert k in self.fields, "%s has no field %r" % (type(self).__name__, k)
        for k in self.fields.keys():
            assert k in kwargs or k in self.defaults, (
                "%s requires field %r" % (type(self).__name__, k)
            )
            value = kwargs[k] if k in kwargs else deepcopy(self.defaults[k])
            object.__setattr__(self, k, value)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("%s is frozen; use replace()" % type(self).__name__)

    def __eq__(self, other: Any) -> bool:
        return eq(self, other)

    __hash__ = None  # type: ignore

    def __repr__(self) -> str:
        return "%s(%s)" % (
            type(self).__name__,
            ', '.join('%s=%r' % (k, getattr(self, k)) for k in self.fields),
        )


def replace(record: TRecord, **changes: Any) -> TRecord:
    values = {k: getattr(record, k) for k in record.fields}
    values.update(changes)
    return type(record)(**values)


def eq(x: Any, y: Any) -> bool:
    if hasattr(x, 'fields') and hasattr(y, 'fields'):
        if type(x) is not type(y):
            return False
        return all(eq(getattr(x, f), getattr(y, f)) for f in x.fields)
    elif isinstance(x, (list, tuple)) and isinstance(y, (list, tuple)):
        return len(x) == len(y) and all(eq(xi, yi) for xi, yi in zip(x, y))
    else:
        return bool(x == y)


def deepcopy(x: Any) -> Any:
    if hasattr(x, 'fields'):
        return x.__class__(**{f: deepcopy(getattr(x, f)) for f in x.fields})
    elif isinstance(x, list):
        return [deepcopy(y) for y in x]
    elif isinstance(x, dict):
        return {key: deepcopy(x[key]) for key in x}
    elif isinstance(x, (set, frozenset)):
        return type(x)(deepcopy(y) for y in x)
    else:
        return x


def to_dict(x: Any) -> Any:
    if hasattr(x, 'fields'):
        return {f: to_dict(getattr(x, f)) for f in x.fields}
    elif isinstance(x, (datetime.date, datetime.datetime)):
        return x.isoformat()
    elif isinstance(x, (set, frozenset)):
        return [to_dict(y) for y in sorted(x)]
    elif isinstance(x, dict):
        return {str(to_dict(k)): to_dict(v) for k, v in x.items()}
    elif isinstance(x, (list, tuple)):
        return [to_dict(y) for y in x]
    else:
        return x


def parse_datetime(value: str) -> datetime.datetime:
    if value.endswith('Z'):
        value = value[:-1] + '+00:00'
    return datetime.datetime.fromisoformat(value)


def _from_value(value: Any, typ: Any) -> Any:
    if isinstance(typ, tuple) and typ[0] == 'optional':
        return None if value is None else _from_value(value, typ[1])
    elif typ == 'date':
        return datetime.date.fromisoformat(value)
    elif typ == 'datetime':
        return parse_datetime(value)
    elif typ == 'str':
        return str(value)
    elif typ == 'int':
        return int(value)
    elif typ == 'float':
        return float(value)
    elif typ == 'bool':
        return bool(value)
    elif typ == 'json':
        return value
    elif isinstance(typ, list):
        assert len(typ) == 1
        return [_from_value(v, typ[0]) for v in value]
    elif isinstance(typ, (set, frozenset)):
        assert len(typ) == 1
        (sub,) = tuple(typ)
        return frozenset(_from_value(v, sub) for v in value)
    elif isinstance(typ, type) and issubclass(typ, Record):
        return from_dict(typ, value)
    raise Exception("Cannot decode", value, typ)


def from_dict(cls: Type[TRecord], data: Dict[str, Any]) -> TRecord:
    if not isinstance(data, collections.abc.Mapping):
        raise TypeError("expected a mapping for %s, got %r" % (cls.__name__, data))
    values = {
        k: _from_value(data[k], typ)
        for k, typ in cls.fields.items()
        if k in data
    }
    return cls(**values)
