from __future__ import annotations

from typing import Hashable, Iterable, Iterator


class IndexedSet:
    """A set that also supports O(1) uniform random choice.

    Elements live in a list; a dict maps each element to its slot so removal
    can swap the last element into the hole.
    """

    __slots__ = ("items", "slot")

    def __init__(self, values: Iterable[Hashable] = ()):
        self.items: list = []
        self.slot: dict = {}
        for v in values:
            self.add(v)

    def add(self, value) -> bool:
        if value in self.slot:
            return False
        self.slot[value] = len(self.items)
        self.items.append(value)
        return True

    def discard(self, value) -> bool:
        i = self.slot.pop(value, None)
        if i is None:
            return False
        last = self.items.pop()
        if i < len(self.items):
            self.items[i] = last
            self.slot[last] = i
        return True

    def remove(self, value) -> None:
        if not self.discard(value):
            raise KeyError(value)

    def clear(self) -> None:
        self.items.clear()
        self.slot.clear()

    def choice(self, rng):
        return self.items[int(rng.random() * len(self.items))]

    def __contains__(self, value) -> bool:
        return value in self.slot

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator:
        return iter(self.items)

    def __bool__(self) -> bool:
        return bool(self.items)

    def __repr__(self) -> str:
        return f"IndexedSet({sorted(self.items)!r})"
