"""Running registered properties: single instances, the whole suite,
counterexample mining, and replay of serialized violations."""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field

from . import generate as gen
from .registry import PROBES, REGISTRY, THEOREMS

PROBE_NOTE = "direction not claimed; violations are expected findings"


@dataclass
class PropertyVerdict:
    pid: str
    tried: int = 0
    hits: int = 0
    undrawn: int = 0
    violations: list = field(default_factory=list)
    parts: Counter = field(default_factory=Counter)
    elapsed: float = 0.0

    @property
    def skipped(self):
        return self.tried - self.hits - self.undrawn

    def to_json(self, timing=True):
        prop = REGISTRY[self.pid]
        out = {
            "statement": prop.statement,
            "conditional": prop.conditional,
            "tried": self.tried,
            "hits": self.hits,
            "skipped": self.skipped,
            "undrawn": self.undrawn,
            "hit_rate": round(self.hits / (self.tried - self.undrawn), 4) if self.tried > self.undrawn else 0.0,
            "parts": dict(sorted(self.parts.items())),
            "violations": self.violations,
        }
        if prop.probe:
            out["note"] = PROBE_NOTE
        if timing:
            out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out


def _lookup(pid):
    if pid not in REGISTRY:
        raise KeyError(f"unknown property {pid!r}; known: {', '.join(REGISTRY)}")
    return REGISTRY[pid]


def instance_seed(seed, pid, i):
    return f"{seed}:{pid}:{i}"


def run_property(pid, seed, profile=None):
    """Evaluate one property on the instance drawn from ``seed``."""
    prop = _lookup(pid)
    rng = gen.make_rng(seed)
    outcome = prop.evaluate(rng, profile or gen.DEFAULT_PROFILE)
    if outcome.violation is not None:
        outcome.violation = {"property": pid, "seed": str(seed), "instance": outcome.instance,
                             **outcome.violation}
    return outcome


def run_batch(pid, seed, profile=None, target=None, max_tries=None):
    """Draw instances until ``target`` hits (or ``max_tries`` draws)."""
    prop = _lookup(pid)
    target = prop.target if target is None else target
    max_tries = max_tries if max_tries is not None else max(20 * target, 50)
    verdict = PropertyVerdict(pid)
    start = time.perf_counter()
    while verdict.hits < target and verdict.tried < max_tries:
        outcome = run_property(pid, instance_seed(seed, pid, verdict.tried), profile)
        verdict.tried += 1
        if outcome.hit:
            verdict.hits += 1
            verdict.parts.update(outcome.parts)
            if outcome.violation is not None:
                verdict.violations.append(outcome.violation)
        elif not outcome.drawn:
            verdict.undrawn += 1
        else:
            verdict.parts.update(f"skipped:{p}" for p in outcome.parts)
    verdict.elapsed = time.perf_counter() - start
    return verdict


def run_suite(seed=0, profile=None, target=None, timing=True, pids=None):
    """Every theorem property and every converse probe; returns a JSON-ready dict."""
    profile = {**gen.DEFAULT_PROFILE, **(profile or {})}
    theorems = [p for p in THEOREMS if pids is None or p in pids]
    probes = [p for p in PROBES if pids is None or p in pids]
    start = time.perf_counter()
    report = {"seed": str(seed), "generator_version": gen.GENERATOR_VERSION,
              "profile": profile, "properties": {}, "probes": {}}
    for pid in theorems:
        report["properties"][pid] = run_batch(pid, seed, profile, target).to_json(timing)
    for pid in probes:
        report["probes"][pid] = run_batch(pid, seed, profile, target).to_json(timing)
    total = sum(len(v["violations"]) for v in report["properties"].values())
    report["summary"] = {
        "violations": total,
        "probe_findings": sum(len(v["violations"]) for v in report["probes"].values()),
        "min_hits": min((v["hits"] for v in report["properties"].values()), default=0),
        "ok": total == 0,
    }
    if timing:
        report["summary"]["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return report


def counterexample_search(pid, budget, seed=0, profile=None):
    """Mine ``budget`` draws for violations of ``pid``."""
    verdict = run_batch(pid, seed, profile, target=budget, max_tries=budget)
    return {"property": pid, "budget": budget, **verdict.to_json(timing=False)}


def replay(violation, profile=None):
    """Re-evaluate a serialized violation; returns the fresh violation record (or None)."""
    return run_property(violation["property"], violation["seed"], profile).violation


def dumps(report):
    return json.dumps(report, sort_keys=True, indent=2, default=str)
