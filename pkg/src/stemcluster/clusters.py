"""Cluster container shared by both backends, plus the JSON report files."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import FormatError
from .preprocess import lexicon_sort_key


def select_stem(members) -> str:
    """The smallest member under (code-point length, lexicographic) order."""
    members = list(members)
    if not members:
        raise ValueError("cannot select a stem from an empty member list")
    return min(members, key=lexicon_sort_key)


@dataclass(frozen=True)
class Cluster:
    stem: str
    members: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if not self.members:
            raise ValueError("a cluster needs at least one member")
        if len(set(self.members)) != len(self.members):
            raise ValueError("cluster members must be pairwise distinct")
        if self.stem not in self.members:
            raise ValueError(f"stem {self.stem!r} is not a member of its cluster")


def write_cluster_report(
    path,
    clusters,
    *,
    exemplars=None,
    mode: str | None = None,
    converged: bool | None = None,
    iterations: int | None = None,
) -> None:
    """Write the cluster report JSON.

    Plain runs produce a bare array of {stem, members}.  When the
    exemplar-based backend supplies its extras, the array is wrapped in an
    object carrying {mode, converged, iterations} and each entry gains its
    exemplar.
    """
    entries = []
    for index, cluster in enumerate(clusters):
        entry = {"stem": cluster.stem, "members": list(cluster.members)}
        if exemplars is not None:
            entry["exemplar"] = exemplars[index]
        entries.append(entry)
    if mode is None and converged is None and iterations is None:
        payload = entries
    else:
        payload = {
            "mode": mode,
            "converged": converged,
            "iterations": iterations,
            "clusters": entries,
        }
    Path(path).write_bytes(
        (json.dumps(payload, ensure_ascii=False, indent=2) + "\n").encode("utf-8")
    )


def read_cluster_report(path) -> tuple[list[Cluster], dict]:
    """Load a cluster report; returns (clusters, run-level metadata)."""
    raw = Path(path).read_bytes().decode("utf-8")
    try:
        payload = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON ({exc})", path=path) from None
    if isinstance(payload, list):
        entries, meta = payload, {}
    elif isinstance(payload, dict) and isinstance(payload.get("clusters"), list):
        entries = payload["clusters"]
        meta = {k: v for k, v in payload.items() if k != "clusters"}
    else:
        raise FormatError("expected a cluster array or an object with a 'clusters' array", path=path)
    clusters = []
    for entry in entries:
        try:
            clusters.append(Cluster(stem=entry["stem"], members=tuple(entry["members"])))
        except (TypeError, KeyError, ValueError) as exc:
            raise FormatError(f"bad cluster entry {entry!r} ({exc})", path=path) from None
    return clusters, meta
