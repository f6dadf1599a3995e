"""Exhaustive generation and avoidance counting.

Counting walks the space of colored canonical words element by element.
When every forbidden pattern has length 2, a branch is abandoned as soon
as a forbidden copy appears (containment is monotone under extension);
`naive=True` forces the full enumeration for oracle duty.  The search
space splits cleanly by word prefix, which is how `jobs > 1` fans out.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .avoidance import Sense, avoids_all, contains_colored
from .core import ColoredPartition, ColoredPattern, print_pattern_set

PREFIX_SPLIT_LENGTH = 4


def iter_rgs(n: int) -> Iterator[tuple[int, ...]]:
    """All restricted growth strings of length n, lexicographically."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    word = [1] * n
    tops = [1] * n  # tops[i] = max of word[:i+1]
    while True:
        yield tuple(word)
        i = n - 1
        while i > 0 and word[i] == tops[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        word[i] += 1
        tops[i] = max(tops[i - 1], word[i])
        for j in range(i + 1, n):
            word[j] = 1
            tops[j] = tops[i]


def iter_rgs_with_prefix(prefix: Sequence[int], n: int) -> Iterator[tuple[int, ...]]:
    """RGS of length n extending `prefix`, lexicographically."""
    prefix = tuple(prefix)
    if len(prefix) > n:
        raise ValueError("prefix longer than n")

    def extend(word, top):
        if len(word) == n:
            yield tuple(word)
            return
        for b in range(1, top + 2):
            word.append(b)
            yield from extend(word, max(top, b))
            word.pop()

    yield from extend(list(prefix), max(prefix, default=0))


def iter_colored(n: int, k: int = 2) -> Iterator[ColoredPartition]:
    """All of Pi_n wr C_k, word-major, colors varying fastest."""
    for word in iter_rgs(n):
        for colors in itertools.product(range(1, k + 1), repeat=n):
            yield ColoredPartition(word, colors, k)


# --- compiled pattern checks for the counting core ----------------------

def _compile(patterns: Sequence[ColoredPattern], sense: Sense):
    """Length-2 patterns as (same_block, mode, c1, c2) tuples.

    mode for the pattern sense encodes the color relation of a copy:
    'eq' (equal colors), 'asc' (strictly rising), 'desc' (strictly
    falling).  For EQ/LT senses the raw colors c1, c2 are used.
    """
    comp = []
    for pi in patterns:
        if pi.n != 2:
            return None
        same = pi.word == (1, 1)
        if sense is Sense.PATTERN:
            rc = pi.reduced_colors
            mode = {(1, 1): "eq", (1, 2): "asc", (2, 1): "desc"}[rc]
            comp.append((same, mode, 0, 0))
        elif sense is Sense.EQ:
            comp.append((same, "exact", pi.colors[0], pi.colors[1]))
        else:
            comp.append((same, "atmost", pi.colors[0], pi.colors[1]))
    return comp


def _new_copy(comp, block_counts, total_counts, b, c, k) -> bool:
    """Would appending an element with block b and color c complete a copy?

    block_counts[b][c] counts earlier elements of block b with color c;
    total_counts[c] counts all earlier elements with color c.
    """
    bc = block_counts[b]
    for same, mode, c1, c2 in comp:
        if mode == "eq":
            prev = bc[c] if same else total_counts[c] - bc[c]
            if prev:
                return True
        elif mode == "asc":
            for cp in range(1, c):
                prev = bc[cp] if same else total_counts[cp] - bc[cp]
                if prev:
                    return True
        elif mode == "desc":
            for cp in range(c + 1, k + 1):
                prev = bc[cp] if same else total_counts[cp] - bc[cp]
                if prev:
                    return True
        elif mode == "exact":
            if c == c2:
                prev = bc[c1] if same else total_counts[c1] - bc[c1]
                if prev:
                    return True
        else:  # atmost
            if c <= c2:
                for cp in range(1, c1 + 1):
                    prev = bc[cp] if same else total_counts[cp] - bc[cp]
                    if prev:
                        return True
    return False


def _count_pruned(n, k, comp, word_prefix=()):
    """Avoiders whose word extends `word_prefix`, counted by pruned DFS."""
    count = 0
    word = list(word_prefix) + [0] * (n - len(word_prefix))
    colors = [0] * n
    block_counts = [[0] * (k + 1) for _ in range(n + 2)]
    total_counts = [0] * (k + 1)
    plen = len(word_prefix)

    def walk(t, top):
        nonlocal count
        if t == n:
            count += 1
            return
        if t < plen:
            bs = (word[t],)
        else:
            bs = range(1, top + 2)
        for b in bs:
            bc = block_counts[b]
            for c in range(1, k + 1):
                if _new_copy(comp, block_counts, total_counts, b, c, k):
                    continue
                word[t] = b
                colors[t] = c
                bc[c] += 1
                total_counts[c] += 1
                walk(t + 1, max(top, b))
                bc[c] -= 1
                total_counts[c] -= 1
        if t >= plen:
            word[t] = 0

    walk(0, 0)
    return count


def _count_naive(n, k, patterns, sense, word_prefix=()):
    """Full-enumeration oracle: test every colored partition."""
    count = 0
    for word in iter_rgs_with_prefix(word_prefix, n):
        for cols in itertools.product(range(1, k + 1), repeat=n):
            sigma = ColoredPartition(word, cols, k)
            if avoids_all(sigma, patterns, sense):
                count += 1
    return count


def _count_worker(args):
    n, k, pattern_keys, sense_value, naive, prefix = args
    patterns = tuple(ColoredPattern(w, c, k) for w, c in pattern_keys)
    sense = Sense(sense_value)
    if naive:
        return _count_naive(n, k, patterns, sense, prefix)
    comp = _compile(patterns, sense)
    if comp is None:
        return _count_naive(n, k, patterns, sense, prefix)
    return _count_pruned(n, k, comp, prefix)


def count_avoiders(n: int, k: int, patterns: Sequence[ColoredPattern],
                   sense: Sense = Sense.PATTERN, *, naive: bool = False,
                   jobs: int = 1) -> int:
    """|{sigma in Pi_n wr C_k : sigma avoids every pattern}|."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    patterns = tuple(patterns)
    if n == 0:
        return 1
    if jobs > 1 and n > PREFIX_SPLIT_LENGTH:
        plen = min(n, PREFIX_SPLIT_LENGTH)
        prefixes = list(iter_rgs(plen))
        keys = tuple((p.word, p.colors) for p in patterns)
        tasks = [(n, k, keys, sense.value, naive, p) for p in prefixes]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return sum(pool.map(_count_worker, tasks, chunksize=4))
    if naive:
        return _count_naive(n, k, patterns, sense)
    comp = _compile(patterns, sense)
    if comp is None:
        return _count_naive(n, k, patterns, sense)
    return _count_pruned(n, k, comp)


def iter_avoiders(n: int, k: int, patterns: Sequence[ColoredPattern],
                  sense: Sense = Sense.PATTERN) -> Iterator[ColoredPartition]:
    """Generate the avoiders of a length-2 pattern set by pruned DFS."""
    patterns = tuple(patterns)
    comp = _compile(patterns, sense)
    if comp is None:
        yield from (s for s in iter_colored(n, k) if avoids_all(s, patterns, sense))
        return
    word = [0] * n
    colors = [0] * n
    block_counts = [[0] * (k + 1) for _ in range(n + 2)]
    total_counts = [0] * (k + 1)

    def walk(t, top):
        if t == n:
            yield ColoredPartition(tuple(word), tuple(colors), k)
            return
        for b in range(1, top + 2):
            bc = block_counts[b]
            for c in range(1, k + 1):
                if _new_copy(comp, block_counts, total_counts, b, c, k):
                    continue
                word[t] = b
                colors[t] = c
                bc[c] += 1
                total_counts[c] += 1
                yield from walk(t + 1, max(top, b))
                bc[c] -= 1
                total_counts[c] -= 1

    yield from walk(0, 0)


def avoider_set(n: int, k: int, patterns: Sequence[ColoredPattern],
                sense: Sense = Sense.PATTERN) -> set[ColoredPartition]:
    """The avoiders themselves (for set-identity checks; small n only)."""
    return {s for s in iter_colored(n, k) if avoids_all(s, patterns, sense)}


@dataclass(frozen=True)
class AvoidanceSequence:
    """Counts |Pi_n wr C_k(S)| for n = 1..n_max."""

    pattern_set: str
    sense: Sense
    k: int
    counts: tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.counts)


def avoidance_sequence(patterns: Sequence[ColoredPattern], sense: Sense = Sense.PATTERN,
                       k: int = 2, n_max: int = 6, *, naive: bool = False,
                       jobs: int = 1) -> AvoidanceSequence:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    patterns = tuple(patterns)
    counts = tuple(count_avoiders(n, k, patterns, sense, naive=naive, jobs=jobs)
                   for n in range(1, n_max + 1))
    return AvoidanceSequence(print_pattern_set(patterns), sense, k, counts)


@dataclass(frozen=True)
class WilfClassification:
    """Pattern sets grouped by identical avoidance sequences up to n_max."""

    n_max: int
    classes: tuple[tuple[tuple[ColoredPattern, ...], ...], ...]
    sequences: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.classes)


def wilf_classify(family: Sequence[Sequence[ColoredPattern]], sense: Sense = Sense.PATTERN,
                  k: int = 2, n_max: int = 6, *, jobs: int = 1) -> WilfClassification:
    """Group pattern sets whose count vectors agree for all n <= n_max."""
    if not family:
        raise ValueError("family must be nonempty")
    buckets: dict[tuple[int, ...], list[tuple[ColoredPattern, ...]]] = {}
    for patterns in family:
        patterns = tuple(sorted(patterns, key=lambda p: (p.word, p.colors)))
        seq = avoidance_sequence(patterns, sense, k, n_max, jobs=jobs).counts
        buckets.setdefault(seq, []).append(patterns)
    classes = []
    for seq, members in buckets.items():
        members.sort(key=print_pattern_set)
        classes.append((members, seq))
    classes.sort(key=lambda pair: print_pattern_set(pair[0][0]))
    return WilfClassification(
        n_max,
        tuple(tuple(members) for members, _ in classes),
        tuple(seq for _, seq in classes),
    )


# --- canonical 2-pattern machinery --------------------------------------

def canonical_pair_patterns(k: int = 2) -> tuple[ColoredPattern, ...]:
    """The six canonical colored patterns of [2] (colors reduced)."""
    pats = []
    for word in ((1, 1), (1, 2)):
        for colors in ((1, 1), (1, 2), (2, 1)):
            pats.append(ColoredPattern(word, colors, k))
    return tuple(pats)


def containment_profiles(n: int, k: int = 2) -> dict[int, int]:
    """Histogram of pattern-sense containment masks over Pi_n wr C_k.

    Bit i of a mask is set when the partition contains the i-th
    canonical 2-pattern (order of `canonical_pair_patterns`).  One full
    naive sweep answers every subset-avoidance count at once:
    |Pi_n wr C_k(S)| = sum of histogram values over masks disjoint from
    S's mask.
    """
    full = (1 << 6) - 1
    hist: dict[int, int] = {}
    for word in iter_rgs(n):
        same = [[i for i in range(j) if word[i] == word[j]] for j in range(n)]
        diff = [[i for i in range(j) if word[i] != word[j]] for j in range(n)]
        for cols in itertools.product(range(1, k + 1), repeat=n):
            mask = 0
            for j in range(1, n):
                cj = cols[j]
                for i in same[j]:
                    ci = cols[i]
                    if ci == cj:
                        mask |= 1
                    elif ci < cj:
                        mask |= 2
                    else:
                        mask |= 4
                for i in diff[j]:
                    ci = cols[i]
                    if ci == cj:
                        mask |= 8
                    elif ci < cj:
                        mask |= 16
                    else:
                        mask |= 32
                if mask == full:
                    break
            if mask == full:
                hist[full] = hist.get(full, 0) + 1
            else:
                hist[mask] = hist.get(mask, 0) + 1
    return hist


def count_from_profiles(hist: dict[int, int],
                        patterns: Sequence[ColoredPattern]) -> int:
    """Avoider count from a `containment_profiles` histogram."""
    canonical = [p.key() for p in canonical_pair_patterns()]
    smask = 0
    for p in patterns:
        smask |= 1 << canonical.index(p.canonical().key())
    return sum(v for mask, v in hist.items() if mask & smask == 0)


# --- empirical verification reports -------------------------------------

@dataclass
class VerificationReport:
    name: str
    checks: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_color_symmetries(n_max: int = 6, k: int = 2, sense: Sense = Sense.PATTERN,
                  *, jobs: int = 1) -> VerificationReport:
    """Color reversal and complement preserve avoidance sequences."""
    from .core import color_complement, color_reverse

    report = VerificationReport("color-symmetry")
    for pi in canonical_pair_patterns(k):
        base = avoidance_sequence((pi,), sense, k, n_max, jobs=jobs).counts
        for label, image in (("reverse", color_reverse(pi)),
                             ("complement", color_complement(pi))):
            other = avoidance_sequence((image,), sense, k, n_max, jobs=jobs).counts
            desc = "%s ~ %s (%s)" % (pi.word_text(), image.word_text(), label)
            if base == other:
                report.checks.append(desc)
            else:
                report.failures.append("%s: %r != %r" % (desc, base, other))
    return report


# pattern-sense avoiders of the left set coincide (as sets) with
# EQ-sense avoiders of the right set
EQ_PATTERN_IDENTITIES = (
    ("1^11^1", "1^11^1,1^21^2"),
    ("1^11^2", "1^11^2"),
    ("1^12^1", "1^12^1,1^22^2"),
    ("1^12^2", "1^12^2"),
)


def verify_eq_pattern_identities(n_max: int = 6) -> VerificationReport:
    """Set equality of pattern-sense and EQ-sense avoider families."""
    from .core import parse_pattern_set

    report = VerificationReport("pattern/EQ set identities")
    for pat_text, eq_text in EQ_PATTERN_IDENTITIES:
        pat = parse_pattern_set(pat_text)
        eq = parse_pattern_set(eq_text)
        for n in range(1, n_max + 1):
            left = avoider_set(n, 2, pat, Sense.PATTERN)
            right = avoider_set(n, 2, eq, Sense.EQ)
            desc = "pat{%s} = eq{%s} at n=%d" % (pat_text, eq_text, n)
            if left == right:
                report.checks.append(desc)
            else:
                witness = next(iter(left.symmetric_difference(right)))
                report.failures.append("%s: witness %s" % (desc, witness.word_text()))
    return report


def nmax_cap() -> int | None:
    """Optional enumeration size cap from the PPL_NMAX_CAP env var."""
    raw = os.environ.get("PPL_NMAX_CAP")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError("PPL_NMAX_CAP must be an integer, got %r" % raw)
