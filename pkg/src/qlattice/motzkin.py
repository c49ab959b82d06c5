"""Motzkin paths, their enumeration, and the q-weight statistic.

A path is a word over {U, D, H} whose running height never dips below the
axis and ends at 0.  The weight multiplies q^j for a horizontal step at
height j and q^j + ... + q^(2j) for a down step landing at height j; up
steps weigh 1.  At q = 1 a down step therefore weighs its starting height.
"""

from __future__ import annotations

from .algebra import QPoly


class MotzkinPath:
    __slots__ = ("steps", "heights")

    def __init__(self, steps):
        h = 0
        heights = [0]
        for i, ch in enumerate(steps, start=1):
            if ch == "U":
                h += 1
            elif ch == "D":
                h -= 1
            elif ch != "H":
                raise ValueError(f"invalid step character {ch!r}")
            if h < 0:
                raise ValueError(f"path goes below the axis at step {i}")
            heights.append(h)
        if h != 0:
            raise ValueError(f"path ends at height {h}, not on the axis")
        self.steps = str(steps)
        self.heights = tuple(heights)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __eq__(self, other):
        return isinstance(other, MotzkinPath) and other.steps == self.steps

    def __hash__(self):
        return hash(self.steps)

    def __repr__(self):
        return f"MotzkinPath({self.steps!r})"

    def __str__(self):
        return self.steps

    @property
    def down_count(self):
        """Number of down steps (equals the number of up steps)."""
        return self.steps.count("D")

    def weight(self):
        """The q-weight: product of the step weights."""
        w = QPoly.one()
        h = 0
        for ch in self.steps:
            if ch == "U":
                h += 1
            elif ch == "H":
                w = w * QPoly.monomial(h)
            else:
                h -= 1
                w = w * QPoly.geometric(h, 2 * h)
        return w


def parse_path(s):
    """Validate a step word; the empty word is the unique path of length 0."""
    return MotzkinPath(s)


def path_weight(p):
    return p.weight()


def down_count(p):
    return p.down_count


def enumerate_paths(n):
    """Yield every path of length n once, lexicographic with D < H < U."""
    buf = []

    def rec(i, h):
        if i == n:
            if h == 0:
                yield MotzkinPath("".join(buf))
            return
        if h > n - i:
            return
        if h > 0:
            buf.append("D")
            yield from rec(i + 1, h - 1)
            buf.pop()
        buf.append("H")
        yield from rec(i + 1, h)
        buf.pop()
        buf.append("U")
        yield from rec(i + 1, h + 1)
        buf.pop()

    yield from rec(0, 0)


def motzkin_number(n):
    """Count of paths of length n, by the convolution recurrence."""
    m = [1] * (n + 1)
    for i in range(1, n + 1):
        m[i] = m[i - 1] + sum(m[k] * m[i - 2 - k] for k in range(i - 1))
    return m[n]


def down_height_product(p):
    """Product over down steps of their starting heights; the size of the
    matching-involution fiber over p."""
    out = 1
    h = 0
    for ch in p.steps:
        if ch == "U":
            h += 1
        elif ch == "D":
            out *= h
            h -= 1
    return out
