"""Basis labels.

A label is a closed term of the grammar

    L ::= Atom(name) | Unit | Pair(L, L) | Inl(L) | Inr(L)
        | Bag(multiset of L) | Point(finite map L -> nonzero scalar)

Bags keep their members in canonical sorted order and points keep their
entries sorted by key, so syntactic equality is semantic equality and
the ordering on labels is total.

Weights: atoms and Unit weigh 0, Pair adds, Inl/Inr are transparent,
a bag weighs its size plus its members, a point weighs 1 plus the key
weight for every entry.
"""

from functools import lru_cache
from typing import Tuple

_TAG_ORDER = {"atom": 0, "unit": 1, "pair": 2, "inl": 3, "inr": 4, "bag": 5, "point": 6}


class Label:
    __slots__ = ("tag", "payload", "_key", "_weight", "_hash")

    def __init__(self, tag, payload, key, weight):
        self.tag = tag
        self.payload = payload
        self._key = key
        self._weight = weight
        self._hash = hash(key)

    @property
    def weight(self) -> int:
        return self._weight

    def sort_key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, Label) and self._key == other._key

    def __lt__(self, other):
        return self._key < other._key

    def __le__(self, other):
        return self._key <= other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return show_label(self)


@lru_cache(maxsize=None)
def atom(name: str) -> Label:
    return Label("atom", name, (0, name), 0)


UNIT = Label("unit", None, (1,), 0)


def unit() -> Label:
    return UNIT


def pair(left: Label, right: Label) -> Label:
    return Label("pair", (left, right),
                 (2, left._key, right._key),
                 left._weight + right._weight)


def inl(inner: Label) -> Label:
    return Label("inl", inner, (3, inner._key), inner._weight)


def inr(inner: Label) -> Label:
    return Label("inr", inner, (4, inner._key), inner._weight)


def bag(members) -> Label:
    ms = tuple(sorted(members, key=Label.sort_key))
    w = len(ms) + sum(m._weight for m in ms)
    return Label("bag", ms, (5, tuple(m._key for m in ms)), w)


def point(entries) -> Label:
    """entries: iterable of (label, scalar) with nonzero scalars."""
    es = tuple(sorted(entries, key=lambda kv: kv[0].sort_key()))
    keys = [k for k, _ in es]
    if len(set(keys)) != len(keys):
        raise ValueError("duplicate key in point label")
    for _, v in es:
        if v == 0:
            raise ValueError("zero coefficient in point label")
    w = sum(1 + k._weight for k, _ in es)
    return Label("point", es, (6, tuple((k._key, v) for k, v in es)), w)


def pair_chain(parts) -> Label:
    """Right-nested pairing of one or more labels (a single label stays bare)."""
    parts = list(parts)
    if not parts:
        return UNIT
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = pair(p, out)
    return out


def unpair_chain(label: Label, n: int) -> Tuple[Label, ...]:
    """Split a right-nested pair chain into n components."""
    if n == 0:
        if label is not UNIT and label.tag != "unit":
            raise ValueError("expected Unit, got %r" % (label,))
        return ()
    parts = []
    cur = label
    for _ in range(n - 1):
        if cur.tag != "pair":
            raise ValueError("label %r does not split into %d parts" % (label, n))
        left, cur = cur.payload
        parts.append(left)
    parts.append(cur)
    return tuple(parts)


def show_label(label: Label) -> str:
    t = label.tag
    if t == "atom":
        return label.payload
    if t == "unit":
        return "*"
    if t == "pair":
        return "(%s, %s)" % (show_label(label.payload[0]), show_label(label.payload[1]))
    if t == "inl":
        return "inl %s" % show_label(label.payload)
    if t == "inr":
        return "inr %s" % show_label(label.payload)
    if t == "bag":
        return "[%s]" % ", ".join(show_label(m) for m in label.payload)
    if t == "point":
        return "{%s}" % ", ".join(
            ("%s" if v == 1 else "%s:" + str(v)) % show_label(k) for k, v in label.payload)
    raise AssertionError(t)


def to_json(label: Label, rig):
    t = label.tag
    if t == "atom":
        return {"atom": label.payload}
    if t == "unit":
        return {"unit": True}
    if t == "pair":
        return {"pair": [to_json(label.payload[0], rig), to_json(label.payload[1], rig)]}
    if t == "inl":
        return {"inl": to_json(label.payload, rig)}
    if t == "inr":
        return {"inr": to_json(label.payload, rig)}
    if t == "bag":
        return {"bag": [to_json(m, rig) for m in label.payload]}
    if t == "point":
        return {"point": [[to_json(k, rig), rig.encode(v)] for k, v in label.payload]}
    raise AssertionError(t)


def from_json(data, rig) -> Label:
    if not isinstance(data, dict) or len(data) != 1:
        raise ValueError("bad label payload: %r" % (data,))
    (tag, body), = data.items()
    if tag == "atom":
        if not isinstance(body, str):
            raise ValueError("atom name must be a string")
        return atom(body)
    if tag == "unit":
        return UNIT
    if tag == "pair":
        left, right = body
        return pair(from_json(left, rig), from_json(right, rig))
    if tag == "inl":
        return inl(from_json(body, rig))
    if tag == "inr":
        return inr(from_json(body, rig))
    if tag == "bag":
        return bag(from_json(m, rig) for m in body)
    if tag == "point":
        entries = []
        for item in body:
            key_data, raw = item
            v = rig.decode(raw)
            if rig.is_zero(v):
                raise ValueError("zero coefficient in point label")
            entries.append((from_json(key_data, rig), v))
        return point(entries)
    raise ValueError("unknown label tag %r" % (tag,))
