"""Reproducible randomized search over PT inertias of random states.

Each sample i draws its state from a generator seeded by the strong hash mix
of (master seed, i) that numpy's SeedSequence performs, so the tally is
deterministic, independent of chunking and worker count, and any alarming
sample can be regenerated bit-for-bit from its recorded seed path.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, NamedTuple

import numpy as np

from .linalg import Inertia, TOL_ZERO
from .states import State, pt_array, random_state

CHUNK = 2048


@dataclass(frozen=True)
class SearchConfig:
    m: int
    n: int
    ranks: tuple[int, ...]
    ensemble: str = "real"
    samples: int = 1000
    seed: int = 0
    workers: int = 1
    tol_zero: float = TOL_ZERO

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if not self.ranks:
            raise ValueError("rank set must be nonempty")
        for r in self.ranks:
            if not 1 <= r <= self.m * self.n:
                raise ValueError(f"rank {r} out of [1, {self.m * self.n}]")
        object.__setattr__(self, "ranks", tuple(int(r) for r in self.ranks))

    def rank_for(self, index: int) -> int:
        # round-robin keeps the allocation deterministic for any sample count
        return self.ranks[index % len(self.ranks)]

    def canonical(self) -> dict:
        # workers are an execution detail and must not affect the result
        return {
            "m": self.m, "n": self.n, "ranks": list(self.ranks),
            "ensemble": self.ensemble, "samples": self.samples,
            "seed": self.seed, "tol_zero": self.tol_zero,
        }

    def digest(self) -> str:
        blob = json.dumps(self.canonical(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


class Alarm(NamedTuple):
    inertia: Inertia
    index: int
    rank: int
    seed_path: tuple[int, int]


@dataclass
class SearchRecord:
    config: SearchConfig
    config_hash: str
    counts: dict[Inertia, int]
    marginal: int
    alarms: list[Alarm]
    wall_time: float = 0.0

    def payload(self) -> dict:
        """The worker-count-independent content of the record."""
        return {
            "config": self.config.canonical(),
            "config_hash": self.config_hash,
            "counts": [[list(k), v] for k, v in sorted(self.counts.items())],
            "marginal": self.marginal,
            "alarms": [
                {"inertia": list(a.inertia), "index": a.index, "rank": a.rank,
                 "seed_path": list(a.seed_path)}
                for a in self.alarms
            ],
        }

    def to_json_line(self) -> str:
        # wall time deliberately excluded: log lines are stable under re-run
        return json.dumps(self.payload(), sort_keys=True)

    @classmethod
    def from_json_line(cls, line: str) -> "SearchRecord":
        data = json.loads(line)
        cfg = SearchConfig(
            m=data["config"]["m"], n=data["config"]["n"],
            ranks=tuple(data["config"]["ranks"]),
            ensemble=data["config"]["ensemble"],
            samples=data["config"]["samples"], seed=data["config"]["seed"],
            tol_zero=data["config"]["tol_zero"],
        )
        counts = {Inertia(*k): v for k, v in data["counts"]}
        alarms = [Alarm(Inertia(*a["inertia"]), a["index"], a["rank"],
                        tuple(a["seed_path"])) for a in data["alarms"]]
        return cls(config=cfg, config_hash=data["config_hash"], counts=counts,
                   marginal=data["marginal"], alarms=alarms)


def _scan_range(cfg: SearchConfig, start: int, stop: int,
                alarm_set: frozenset[Inertia]):
    """Tally one contiguous index range; batched eigensolves per chunk."""
    d = cfg.m * cfg.n
    counts: dict[Inertia, int] = {}
    marginal = 0
    alarms: list[Alarm] = []
    lo = start
    while lo < stop:
        hi = min(lo + CHUNK, stop)
        complex_mode = cfg.ensemble == "complex"
        gammas = np.empty((hi - lo, d, d), dtype=complex if complex_mode else float)
        for idx in range(lo, hi):
            state = random_state(cfg.m, cfg.n, cfg.rank_for(idx), cfg.ensemble,
                                 seed=(cfg.seed, idx))
            gamma = pt_array(state.mat, cfg.m, cfg.n)
            gammas[idx - lo] = gamma if complex_mode else gamma.real
        vals = np.linalg.eigvalsh(gammas)
        scale = np.maximum(1.0, np.abs(vals).max(axis=1))

        def tally(tol):
            t = (tol * scale)[:, None]
            return (vals < -t).sum(axis=1), (vals > t).sum(axis=1)

        neg, pos = tally(cfg.tol_zero)
        neg_lo, pos_lo = tally(cfg.tol_zero / 10)
        neg_hi, pos_hi = tally(cfg.tol_zero * 10)
        is_marginal = (neg != neg_lo) | (pos != pos_lo) | (neg != neg_hi) | (pos != pos_hi)
        for off in range(hi - lo):
            if is_marginal[off]:
                marginal += 1
                continue
            triple = Inertia(int(neg[off]), d - int(neg[off]) - int(pos[off]),
                             int(pos[off]))
            counts[triple] = counts.get(triple, 0) + 1
            if triple in alarm_set:
                idx = lo + off
                alarms.append(Alarm(triple, idx, cfg.rank_for(idx),
                                    (cfg.seed, idx)))
        lo = hi
    return counts, marginal, alarms


def _scan_star(args):
    return _scan_range(*args)


def run_search(cfg: SearchConfig,
               alarm_set: Iterable[Inertia] = ()) -> SearchRecord:
    """Draw cfg.samples random states, tally PT inertias, log alarm hits.

    Marginal samples (tolerance-sensitive spectra) are tallied separately and
    never raise alarms.  The record is identical for any cfg.workers value.
    """
    alarm_set = frozenset(Inertia(*a) for a in alarm_set)
    t0 = time.perf_counter()
    spans = [(cfg, lo, min(lo + 4 * CHUNK, cfg.samples), alarm_set)
             for lo in range(0, cfg.samples, 4 * CHUNK)]
    if cfg.workers > 1 and len(spans) > 1:
        with Pool(cfg.workers) as pool:
            parts = pool.map(_scan_star, spans)
    else:
        parts = [_scan_range(*span) for span in spans]
    counts: dict[Inertia, int] = {}
    marginal = 0
    alarms: list[Alarm] = []
    for part_counts, part_marginal, part_alarms in parts:
        for k, v in part_counts.items():
            counts[k] = counts.get(k, 0) + v
        marginal += part_marginal
        alarms.extend(part_alarms)
    alarms.sort(key=lambda a: a.index)
    wall = time.perf_counter() - t0
    assert sum(counts.values()) + marginal == cfg.samples
    return SearchRecord(config=cfg, config_hash=cfg.digest(), counts=counts,
                        marginal=marginal, alarms=alarms, wall_time=wall)


def replay(record: SearchRecord, alarm_index: int) -> State:
    """Regenerate the state behind one recorded alarm, bit-for-bit."""
    if record.config.digest() != record.config_hash:
        raise ValueError("stale record: config hash does not match its config")
    if not record.alarms:
        raise ValueError("record has no alarms to replay")
    if not 0 <= alarm_index < len(record.alarms):
        raise IndexError(f"alarm index {alarm_index} out of range "
                         f"[0, {len(record.alarms)})")
    alarm = record.alarms[alarm_index]
    return random_state(record.config.m, record.config.n, alarm.rank,
                        record.config.ensemble, seed=alarm.seed_path)


def append_record(path, record: SearchRecord) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(record.to_json_line() + "\n")


def load_records(path) -> list[SearchRecord]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(SearchRecord.from_json_line(line))
    return out
