"""Independent oracles and synthetic data generators for the test suite.

Everything here is deliberately written without reusing the package's own
set-based machinery, so a test comparing the two routes is a genuine
cross-check: gram lists are deduplicated by linear scan, overlaps counted
by pairwise comparison, the greedy walk re-enacted literally, and the
exemplar optimum found by exhaustive subset search.
"""

from __future__ import annotations

import random
from itertools import combinations

from stemcluster import build_lexicon

BANGLA_LETTERS = (
    "অআইঈউঊএঐওঔ"
    "কখগঘঙচছজঝঞটঠডঢণতথদধনপফবভমযরলশষসহ"
    "ািীুূৃেৈোৌ"
    "্ংঃঁড়ঢ়য়"
)

SUFFIXES = ("ের", "রা", "টা", "টি", "তে", "কে", "গুলো", "গুলি", "দের", "ে", "র")


def random_word(rng: random.Random, min_len: int = 2, max_len: int = 10) -> str:
    return "".join(rng.choice(BANGLA_LETTERS) for _ in range(rng.randint(min_len, max_len)))


def synthetic_lexicon(count: int, seed: int = 0):
    """Deterministic pseudo-Bangla lexicon: random stems plus suffixed variants."""
    rng = random.Random(seed)
    words: set[str] = set()
    while len(words) < count:
        stem = random_word(rng, 3, 7)
        words.add(stem)
        for _ in range(rng.randint(0, 4)):
            words.add(stem + rng.choice(SUFFIXES))
    ordered = sorted(words, key=lambda w: (len(w), w))[:count]
    return build_lexicon(ordered)


def distinct_gram_list(word: str, order: str) -> list[str]:
    """Distinct grams as a list, deduplicated by linear membership scan."""
    spans: list[str] = []
    if order in ("2", "2+3"):
        spans.extend(word[i : i + 2] for i in range(len(word) - 1))
    if order in ("3", "2+3"):
        spans.extend(word[i : i + 3] for i in range(len(word) - 2))
    out: list[str] = []
    for gram in spans:
        if gram not in out:
            out.append(gram)
    return out


def dice_oracle(w1: str, w2: str, order: str = "2") -> float:
    """2C/(A+B) with the overlap counted by O(|A|*|B|) pairwise comparison."""
    g1 = distinct_gram_list(w1, order)
    g2 = distinct_gram_list(w2, order)
    common = sum(1 for a in g1 for b in g2 if a == b)
    denominator = len(g1) + len(g2)
    if denominator == 0:
        return 0.0
    return 2 * common / denominator


def greedy_oracle(words, order: str = "2", threshold: float = 0.06):
    """Literal re-enactment of the clustering walk on a plain word list.

    Returns [(stem, members), ...] in seed order.
    """
    pending = list(words)
    clusters = []
    while pending:
        seed = pending[0]
        members = [seed]
        rest = []
        for word in pending[1:]:
            if dice_oracle(seed, word, order) >= threshold:
                members.append(word)
            else:
                rest.append(word)
        pending = rest
        stem = min(members, key=lambda w: (len(w), w))
        clusters.append((stem, tuple(members)))
    return clusters


def net_similarity(s, exemplars) -> float:
    """Score of an exemplar set: chosen preferences plus best assignments."""
    exemplar_set = set(exemplars)
    total = 0.0
    for k in exemplar_set:
        total += float(s[k][k])
    for i in range(len(s)):
        if i not in exemplar_set:
            total += max(float(s[i][k]) for k in exemplar_set)
    return total


def best_net_similarity(s) -> tuple[tuple[int, ...], float]:
    """Exhaustive search over every non-empty exemplar subset."""
    n = len(s)
    best: tuple[int, ...] = ()
    best_value = float("-inf")
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            value = net_similarity(s, subset)
            if value > best_value:
                best_value = value
                best = subset
    return best, best_value


def score_oracle(clusters, gold) -> tuple[int, int, int, float]:
    """Per-cluster pairwise label scan; returns (total, correct, correct_words, accuracy)."""
    total = len(clusters)
    correct = 0
    correct_words = 0
    for cluster in clusters:
        covered = [word for word in cluster.members if word in gold]
        pure = len(covered) > 0
        for a in covered:
            for b in covered:
                if gold[a] != gold[b]:
                    pure = False
        if pure:
            correct += 1
            correct_words += len(covered)
    accuracy = correct / total if total else 0.0
    return total, correct, correct_words, accuracy
