"""Exemplar clustering by responsibility/availability message passing.

Works on a dense, symmetric word-pair similarity matrix built in one of
two modes: ``coefficient`` (dice over pooled bigram+trigram profiles,
values in [0, 1]) or ``median`` (negated median character-offset
distance, values in [-200, 0]).  The diagonal carries the preference;
higher preferences buy more clusters.

Every point starts as a potential exemplar.  Each iteration sends
responsibilities

    r(i,k) <- s(i,k) - max_{k' != k} (a(i,k') + s(i,k'))

then availabilities

    a(i,k) <- min(0, r(k,k) + sum_{i' not in {i,k}} max(0, r(i',k)))   (i != k)
    a(k,k) <- sum_{i' != k} max(0, r(i',k))

each blended as damping*old + (1-damping)*new.  Iteration stops once the
exemplar set {k : r(k,k) + a(k,k) > 0} has been stable for a window of
iterations, or at the iteration cap.

Exactly tied instances (e.g. two identical points with equal preference)
make the messages perfectly symmetric and every self-belief converges to
zero, electing nobody.  To stay deterministic without random noise, the
working copy lowers point k's preference by k * 1e-12 * max|s| before
iterating; the ordering-based tiebreak is far below any meaningful
similarity difference.

Dense [n, n] messages mean quadratic memory, so matrix construction
refuses lexicons beyond ``max_points`` up front instead of dying with a
MemoryError halfway through.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clusters import Cluster, select_stem
from .errors import CapacityError, ConfigError, DegenerateClusteringError
from .ngrams import combined_profile, median_offset_distance
from .preprocess import Lexicon

COEFFICIENT = "coefficient"
MEDIAN = "median"
MODES = (COEFFICIENT, MEDIAN)

MEDIAN_PREFERENCE = "median"

_TIE_BREAK = 1e-12


@dataclass(frozen=True)
class APConfig:
    damping: float = 0.5
    preference: float | str = MEDIAN_PREFERENCE
    max_iterations: int = 200
    convergence_window: int = 15
    max_points: int = 20000

    def __post_init__(self):
        if not 0.5 <= self.damping < 1.0:
            raise ConfigError(f"damping must lie in [0.5, 1), got {self.damping}")
        if isinstance(self.preference, str) and self.preference != MEDIAN_PREFERENCE:
            raise ConfigError(f"preference must be a number or 'median', got {self.preference!r}")
        if self.max_iterations < 1:
            raise ConfigError("max_iterations must be at least 1")
        if self.convergence_window < 1:
            raise ConfigError("convergence_window must be at least 1")
        if self.max_points < 2:
            raise ConfigError("max_points must be at least 2")


@dataclass
class SimilarityMatrix:
    words: tuple[str, ...]
    s: np.ndarray
    mode: str

    def __post_init__(self):
        self.words = tuple(self.words)
        self.s = np.asarray(self.s, dtype=np.float64)
        n = len(self.words)
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.s.shape != (n, n):
            raise ConfigError(f"similarity matrix must be {n}x{n}, got {self.s.shape}")
        if not np.array_equal(self.s, self.s.T):
            raise ConfigError("similarity matrix must be symmetric")
        off_diagonal = self.s[~np.eye(n, dtype=bool)]
        if self.mode == COEFFICIENT:
            ok = np.all((off_diagonal >= 0.0) & (off_diagonal <= 1.0))
        else:
            ok = np.all((off_diagonal >= -200.0) & (off_diagonal <= 0.0))
        if not ok:
            raise ConfigError(f"off-diagonal similarities out of range for mode {self.mode!r}")


@dataclass
class APResult:
    clusters: list[Cluster]
    exemplars: list[str]
    converged: bool
    iterations: int
    mode: str


def build_similarity_matrix(
    lexicon: Lexicon, mode: str = COEFFICIENT, config: APConfig | None = None
) -> SimilarityMatrix:
    """Dense symmetric similarities with the preference on the diagonal."""
    cfg = config or APConfig()
    words = lexicon.words
    n = len(words)
    if n > cfg.max_points:
        raise CapacityError(
            f"lexicon has {n} words but max_points={cfg.max_points}; "
            f"dense [n, n] message matrices at this size exhaust memory"
        )
    if n < 2:
        raise ConfigError("similarity matrix needs at least 2 words")
    if mode == COEFFICIENT:
        s = _coefficient_matrix(words)
    elif mode == MEDIAN:
        s = _median_matrix(words)
    else:
        raise ConfigError(f"mode must be one of {MODES}, got {mode!r}")
    off_diagonal = s[~np.eye(n, dtype=bool)]
    if cfg.preference == MEDIAN_PREFERENCE:
        preference = float(np.median(off_diagonal))
    else:
        preference = float(cfg.preference)
    np.fill_diagonal(s, preference)
    return SimilarityMatrix(words=words, s=s, mode=mode)


def _coefficient_matrix(words) -> np.ndarray:
    # shared-gram counts via posting lists: a gram seen by m words adds 1 to
    # each of the m*m pairs, so only co-occurring pairs cost anything
    profiles = [combined_profile(word).grams for word in words]
    sizes = np.array([len(grams) for grams in profiles], dtype=np.int64)
    postings: dict[str, list[int]] = {}
    for index, grams in enumerate(profiles):
        for gram in grams:
            postings.setdefault(gram, []).append(index)
    n = len(profiles)
    common = np.zeros((n, n), dtype=np.int32)
    for posting in postings.values():
        if len(posting) > 1:
            idx = np.asarray(posting, dtype=np.intp)
            common[np.ix_(idx, idx)] += 1
    return (2.0 * common) / (sizes[:, None] + sizes[None, :])


def _median_matrix(words) -> np.ndarray:
    n = len(words)
    s = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(i + 1, n):
            value = median_offset_distance(words[i], words[j])
            s[i, j] = value
            s[j, i] = value
    return s


def message_passing(
    S: np.ndarray,
    damping: float = 0.5,
    max_iterations: int = 200,
    convergence_window: int = 15,
) -> tuple[np.ndarray, np.ndarray, int, bool]:
    """Iterate the damped updates on a raw similarity matrix.

    Returns (R, A, iterations run, converged).  Convergence means a
    non-empty exemplar set unchanged over ``convergence_window``
    consecutive iterations.
    """
    n = S.shape[0]
    if S.shape != (n, n) or n < 2:
        raise ConfigError("message passing needs a square matrix over at least 2 points")
    R = np.zeros_like(S)
    A = np.zeros_like(S)
    rows = np.arange(n)
    previous: tuple[int, ...] | None = None
    stable = 0
    converged = False
    iteration = 0
    for iteration in range(1, max_iterations + 1):
        AS = A + S
        best = np.argmax(AS, axis=1)
        first_max = AS[rows, best]
        AS[rows, best] = -np.inf
        second_max = AS.max(axis=1)
        R_new = S - first_max[:, None]
        R_new[rows, best] = S[rows, best] - second_max
        R = damping * R + (1.0 - damping) * R_new

        clipped = np.maximum(R, 0.0)
        np.fill_diagonal(clipped, R.diagonal())
        column_sums = clipped.sum(axis=0)
        A_new = column_sums[None, :] - clipped
        self_availability = A_new.diagonal().copy()
        A_new = np.minimum(A_new, 0.0)
        np.fill_diagonal(A_new, self_availability)
        A = damping * A + (1.0 - damping) * A_new

        exemplars = tuple(np.flatnonzero(R.diagonal() + A.diagonal() > 0.0))
        if exemplars == previous:
            stable += 1
        else:
            stable = 0
        previous = exemplars
        if exemplars and stable >= convergence_window - 1:
            converged = True
            break
    return R, A, iteration, converged


def run_ap(matrix: SimilarityMatrix, config: APConfig | None = None) -> APResult:
    """Cluster the matrix; stems are the shortest members, exemplars reported.

    Raises DegenerateClusteringError when no exemplar emerges; a run that
    merely fails to stabilise comes back with ``converged=False``.
    """
    cfg = config or APConfig()
    n = len(matrix.words)
    S = np.array(matrix.s, dtype=np.float64, copy=True)
    scale = float(np.max(np.abs(S)))
    if scale == 0.0:
        scale = 1.0
    S[np.arange(n), np.arange(n)] -= np.arange(n) * scale * _TIE_BREAK
    R, A, iterations, converged = message_passing(
        S, cfg.damping, cfg.max_iterations, cfg.convergence_window
    )
    beliefs = R.diagonal() + A.diagonal()
    exemplar_indices = np.flatnonzero(beliefs > 0.0)
    if exemplar_indices.size == 0:
        raise DegenerateClusteringError(
            "no exemplar emerged (all self-beliefs <= 0); raise the preference value"
        )
    # ties go to the lowest exemplar index: argmax returns the first maximum
    # and exemplar_indices is ascending
    assignment = exemplar_indices[np.argmax(matrix.s[:, exemplar_indices], axis=1)]
    assignment[exemplar_indices] = exemplar_indices
    clusters: list[Cluster] = []
    exemplar_words: list[str] = []
    for k in exemplar_indices:
        member_indices = np.flatnonzero(assignment == k)
        members = tuple(matrix.words[i] for i in member_indices)
        clusters.append(Cluster(stem=select_stem(members), members=members))
        exemplar_words.append(matrix.words[k])
    return APResult(
        clusters=clusters,
        exemplars=exemplar_words,
        converged=converged,
        iterations=iterations,
        mode=matrix.mode,
    )


def ap_stats(clusters) -> dict:
    """Cluster count and the size of each cluster, in cluster order."""
    sizes = [len(cluster.members) for cluster in clusters]
    return {"total_clusters": len(sizes), "sizes": sizes}
