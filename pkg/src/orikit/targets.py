"""Candidate universal targets and seeded certified searches.

Random and quadratic-residue tournaments, random full k-partite orientations,
and the trial loops that couple them to the exhaustive certifiers.  Searches
are reproducible: trial i draws from seed H(master_seed, i), so worker count
never changes the result.
"""
from __future__ import annotations

import hashlib
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .certify import Certificate, certificate_digest, check_comprehensive, check_full
from .errors import BadModulus, NotFound
from .graphs import OrientedGraph, parse_digraph, serialize_digraph


class Tournament(OrientedGraph):
    """Oriented graph with exactly one arc between every vertex pair."""

    def __post_init__(self):
        super().__post_init__()
        want = self.n * (self.n - 1) // 2
        if len(self.arcs) != want:
            raise ValueError(
                f"not a tournament: {len(self.arcs)} arcs, expected {want}")


@dataclass(frozen=True)
class FullKPartite(OrientedGraph):
    """Orientation of complete k-partite K_{N,...,N}; part i is the id block
    [i*N, (i+1)*N)."""

    k: int
    N: int

    def __post_init__(self):
        super().__post_init__()
        if self.n != self.k * self.N:
            raise ValueError(f"n={self.n} is not k*N={self.k * self.N}")
        cross = self.k * (self.k - 1) * self.N * self.N // 2
        if len(self.arcs) != cross:
            raise ValueError(
                f"{len(self.arcs)} arcs, expected {cross} cross-part arcs")
        for u, v in self.arcs:
            if u // self.N == v // self.N:
                raise ValueError(f"intra-part arc ({u},{v})")

    def part_of(self, v: int) -> int:
        return v // self.N


@dataclass(frozen=True)
class SearchReport:
    attempts: int
    seed: int
    found: Optional[OrientedGraph]
    certificate: Optional[Certificate]
    wall_time_ms: float
    trial: Optional[int] = None  # index of the successful trial, -1 for qr


# ------------------------------------------------------------- generators

def trial_seed(master_seed: int, i: int) -> int:
    """Public mixing function for per-trial seeds."""
    digest = hashlib.sha256(f"{master_seed}:{i}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def random_tournament(n: int, seed: int) -> Tournament:
    """Each pair's orientation is an independent fair coin; platform-stable."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    rng = random.Random(seed)
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            arcs.append((u, v) if rng.getrandbits(1) else (v, u))
    return Tournament(n, tuple(arcs))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def qr_tournament(p: int) -> Tournament:
    """Cayley tournament on Z_p with the nonzero quadratic residues.

    Arc (i,j) iff j-i is a nonzero square mod p; needs p prime and
    p = 3 (mod 4) so that exactly one of +-x is a residue.
    """
    if not _is_prime(p):
        raise BadModulus(p, "not prime")
    if p % 4 != 3:
        raise BadModulus(p, "p mod 4 is not 3")
    residues = {(x * x) % p for x in range(1, p)}
    arcs = [(i, j) for i in range(p) for j in range(p)
            if i != j and (j - i) % p in residues]
    return Tournament(p, tuple(arcs))


def random_full_orientation(k: int, N: int, seed: int) -> FullKPartite:
    """Fair-coin orientation of complete k-partite K_{N,...,N}."""
    if k < 2 or N < 1:
        raise ValueError(f"need k >= 2 and N >= 1, got k={k}, N={N}")
    rng = random.Random(seed)
    n = k * N
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if u // N != v // N:
                arcs.append((u, v) if rng.getrandbits(1) else (v, u))
    return FullKPartite(n, tuple(arcs), k, N)


# ------------------------------------------------------------ trial loops

def _comprehensive_trial(args):
    k, t, n, master_seed, i = args
    T = random_tournament(n, trial_seed(master_seed, i))
    return i, check_comprehensive(T, k, t)


def _full_trial(args):
    k, t, N, master_seed, i = args
    K = random_full_orientation(k, N, trial_seed(master_seed, i))
    return i, check_full(K, t)


def _run_trials(task, arg_of, max_trials: int, jobs: int):
    """First-PASS trial index and certificate, independent of worker count.

    Workers process trials in waves; the winner is the smallest passing index
    of the first wave containing any pass, which equals the sequential result.
    Returns (index, certificate) or (None, last_certificate).
    """
    last_cert = None
    if jobs <= 1:
        for i in range(max_trials):
            _, cert = task(arg_of(i))
            if cert.passed():
                return i, cert
            last_cert = cert
        return None, last_cert
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        i = 0
        while i < max_trials:
            wave = list(range(i, min(i + jobs, max_trials)))
            results = list(pool.map(task, [arg_of(j) for j in wave]))
            winners = [(j, c) for j, c in results if c.passed()]
            if winners:
                return min(winners, key=lambda jc: jc[0])
            last_cert = results[-1][1]
            i += jobs
    return None, last_cert


def find_comprehensive(k: int, t: int, n: int, max_trials: int, seed: int,
                       qr_first: bool = False, jobs: int = 1) -> SearchReport:
    """Seeded search for a certified (k,t)-comprehensive tournament of order n.

    Draws random tournaments trial by trial; with qr_first the quadratic
    residue tournament on n is certified before any random trial (n must then
    be a prime = 3 mod 4).  Raises NotFound when the budget is exhausted.
    """
    if n <= k:
        raise ValueError(f"need n > k, got n={n}, k={k}")
    t0 = time.perf_counter()
    pre_attempts = 0
    if qr_first:
        T = qr_tournament(n)  # raises BadModulus when inapplicable
        cert = check_comprehensive(T, k, t)
        pre_attempts = 1
        if cert.passed():
            ms = (time.perf_counter() - t0) * 1000.0
            return SearchReport(1, seed, T, cert, ms, trial=-1)
    idx, cert = _run_trials(
        _comprehensive_trial, lambda i: (k, t, n, seed, i), max_trials, jobs)
    ms = (time.perf_counter() - t0) * 1000.0
    if idx is None:
        witness = cert.witness if cert is not None else None
        raise NotFound(pre_attempts + max_trials, witness)
    T = random_tournament(n, trial_seed(seed, idx))
    return SearchReport(pre_attempts + idx + 1, seed, T, cert, ms, trial=idx)


def find_full(k: int, t: int, N: int, max_trials: int, seed: int,
              jobs: int = 1) -> SearchReport:
    """Seeded search for a certified (k,t,N)-full orientation of K_{N,...,N}."""
    t0 = time.perf_counter()
    idx, cert = _run_trials(
        _full_trial, lambda i: (k, t, N, seed, i), max_trials, jobs)
    ms = (time.perf_counter() - t0) * 1000.0
    if idx is None:
        witness = cert.witness if cert is not None else None
        raise NotFound(max_trials, witness)
    K = random_full_orientation(k, N, trial_seed(seed, idx))
    return SearchReport(idx + 1, seed, K, cert, ms, trial=idx)


# ------------------------------------------------------------------ cache

def cache_dir(explicit=None) -> Path:
    if explicit is not None:
        return Path(explicit)
    return Path(os.environ.get("ORIKIT_CACHE", ".orikit-cache"))


def _cache_key(prop: str, k: int, t: int, n: int) -> str:
    return f"{prop}-k{k}-t{t}-n{n}"


def store_target(graph: OrientedGraph, sidecar: dict, directory) -> dict:
    """Write <key>.arcs plus a JSON sidecar; returns sidecar with file paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    key = _cache_key(sidecar["property"], sidecar["k"], sidecar["t"],
                     sidecar["n"])
    arcs_path = directory / f"{key}.arcs"
    meta_path = directory / f"{key}.json"
    arcs_path.write_text(serialize_digraph(graph))
    sidecar = dict(sidecar)
    sidecar["schema"] = 1
    meta_path.write_text(
        json.dumps(sidecar, sort_keys=True, indent=2) + "\n")
    sidecar["arcs_file"] = str(arcs_path)
    sidecar["sidecar_file"] = str(meta_path)
    return sidecar


def load_target(prop: str, k: int, t: int, n: int, directory):
    """Cached (graph, sidecar) for the key, or None."""
    directory = Path(directory)
    key = _cache_key(prop, k, t, n)
    arcs_path = directory / f"{key}.arcs"
    meta_path = directory / f"{key}.json"
    if not (arcs_path.exists() and meta_path.exists()):
        return None
    sidecar = json.loads(meta_path.read_text())
    g = parse_digraph(arcs_path.read_text())
    if prop == "comprehensive":
        graph = Tournament(g.n, g.arcs)
    else:
        graph = FullKPartite(g.n, g.arcs, sidecar["k"], sidecar["N"])
    sidecar["arcs_file"] = str(arcs_path)
    sidecar["sidecar_file"] = str(meta_path)
    return graph, sidecar


def ensure_comprehensive(k: int, t: int, n: int, max_trials: int, seed: int,
                         directory=None, jobs: int = 1,
                         qr_first: bool = False):
    """Cache-or-search for a certified comprehensive tournament.

    Returns (Tournament, sidecar).  The sidecar records the seed and the
    digest of the certification so tests can re-verify from scratch.
    """
    directory = cache_dir(directory)
    hit = load_target("comprehensive", k, t, n, directory)
    if hit is not None:
        return hit
    report = find_comprehensive(k, t, n, max_trials, seed,
                                qr_first=qr_first, jobs=jobs)
    sidecar = {
        "property": "comprehensive", "k": k, "t": t, "n": n,
        "seed": seed, "trial": report.trial,
        "certificate_digest": certificate_digest(report.certificate),
    }
    sidecar = store_target(report.found, sidecar, directory)
    return report.found, sidecar


def ensure_full(k: int, t: int, N: int, max_trials: int, seed: int,
                directory=None, jobs: int = 1):
    """Cache-or-search for a certified (k,t,N)-full orientation."""
    directory = cache_dir(directory)
    hit = load_target("full", k, t, N * k, directory)
    if hit is not None:
        return hit
    report = find_full(k, t, N, max_trials, seed, jobs=jobs)
    sidecar = {
        "property": "full", "k": k, "t": t, "n": N * k, "N": N,
        "seed": seed, "trial": report.trial,
        "certificate_digest": certificate_digest(report.certificate),
    }
    sidecar = store_target(report.found, sidecar, directory)
    return report.found, sidecar
