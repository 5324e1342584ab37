"""Reproducibility checks for the built-in fixtures and the structural results.

Each ``criterion_*`` function returns a ``CriterionResult``; ``run_all`` runs
the twelve of them in order.  Sample sizes default to the full acceptance
sizes and every random draw comes from one seeded ``random.Random``.
"""
from __future__ import annotations

import random
import statistics
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from . import fixtures, generator
from .duality import check_prop_polar, polar_dual
from .equilibria import classify, maxwell_check
from .errors import DegenerateDirections, ExcludedTetrahedron, GeometryError, NoObtusePath, SearchExhausted
from .monostatic import (
    find_obtuse_cycles,
    find_obtuse_paths,
    monostable_weighting,
    monounstable_weighting,
)
from .polyhedron import FaceVector, WeightedPolyhedron, face_vector, is_legal, validate
from .sampling import (
    random_classified_polyhedron,
    random_direction,
    random_interior_point,
    random_tetrahedron,
)
from .tipping import resting_height2, tip_path
from .vertex_links import ADMISSIBLE_SIGNATURES, classify_spherical_triangle, lemma_violations, vertex_signature

DEFAULT_SEED = 20240501

CASE_II = Counter([(0, 0), (1, 1), (1, 1), (2, 2)])
CASE_IV = Counter([(0, 1), (1, 1), (1, 1), (2, 3)])
CASE_V = Counter([(1, 1), (1, 1), (1, 1), (1, 1)])
FORBIDDEN_CASES = {"II": CASE_II, "IV": CASE_IV, "V": CASE_V}


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:2d}. {self.title} ({self.seconds:.2f}s) - {self.detail}"


def _timed(fn, *args, **kwargs):
    start = time.perf_counter()
    value = fn(*args, **kwargs)
    return value, time.perf_counter() - start


def criterion_1() -> CriterionResult:
    wp = fixtures.t0()
    report = classify(wp)
    abc = 3  # the face opposite D
    times = []
    for _ in range(200):
        times.append(_timed(classify, wp)[1])
    median = statistics.median(times)
    ok = (report.reliable and report.stable_faces == {abc} and report.U == 2 and report.H == 1
          and median < 1e-3)
    return CriterionResult(1, "T0 monostable on face ABC", ok,
                           f"S={sorted(report.stable_faces)} U={report.U} H={report.H}, "
                           f"median classify {median * 1e3:.3f} ms (limit 1 ms)", median)


def criterion_2() -> CriterionResult:
    seen, wrong, total = set(), [], 0.0
    for name in sorted(fixtures.NINE_CENTERS):
        report, dt = _timed(classify, fixtures.nine_centers(name))
        total += dt
        expected = (int(name[1]), int(name[2]))
        got = (report.S, report.U)
        seen.add(got)
        if got != expected or not report.reliable:
            wrong.append(f"{name}->{got}")
    cover = seen == {(s, u) for s in (2, 3, 4) for u in (2, 3, 4)}
    ok = not wrong and cover and total < 1e-2
    detail = "M_ij gives (S, U) = (i, j) for all nine" if not wrong else "mismatch: " + ", ".join(wrong)
    return CriterionResult(2, "nine-center tetrahedron covers {2,3,4}x{2,3,4}", ok,
                           f"{detail}; {total * 1e3:.2f} ms total (limit 10 ms)", total)


def criterion_3() -> CriterionResult:
    wp, dt = _timed(fixtures.seed585)
    report = classify(wp)
    fv = face_vector(wp.shape).as_tuple()
    ok = report.reliable and report.counts() == (1, 0, 1) and fv == (5, 8, 5) and validate(wp.shape).ok
    return CriterionResult(3, "seed (5,8,5) is mono-monostatic", ok,
                           f"(S,H,U)={report.counts()} face vector {fv}", dt)


def criterion_4(n: int = 1000, seed: int = DEFAULT_SEED) -> CriterionResult:
    rng = random.Random(seed)
    start = time.perf_counter()
    bad = 0
    for _ in range(n):
        _, report = random_classified_polyhedron(rng)
        bad += not maxwell_check(report)
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 10
    return CriterionResult(4, "Maxwell S - H + U = 2", ok,
                           f"{n - bad}/{n} random polyhedra satisfy it (limit 10 s)", elapsed)


@dataclass
class TetraSurvey:
    """Everything criteria 5-8 and 10 need from one seeded tetrahedron sample."""

    n: int
    seed: int
    with_path: int = 0
    with_cycle: int = 0
    equivalence_seconds: float = 0.0
    equivalence_failures: list = field(default_factory=list)
    random_s1_on_path_free: int = 0
    random_u1_on_cycle_free: int = 0
    monostable: list = field(default_factory=list)  # (tetrahedron, weighted, report)
    monounstable: list = field(default_factory=list)
    both: int = 0
    u1_signature_multisets: list = field(default_factory=list)
    unstable_search_failures: int = 0


def _signature_multiset(t) -> Counter:
    return Counter(vertex_signature(t, v).pair() for v in range(4))


@lru_cache(maxsize=4)
def tetra_survey(n: int = 10_000, seed: int = DEFAULT_SEED, centers_per_tetrahedron: int = 3) -> TetraSurvey:
    rng = random.Random(seed)
    out = TetraSurvey(n, seed)
    for _ in range(n):
        start = time.perf_counter()
        t = random_tetrahedron(rng)
        paths = find_obtuse_paths(t)
        built = []
        for fid in range(4):
            try:
                wp = monostable_weighting(t, fid)
            except NoObtusePath:
                break
            except GeometryError:
                continue
            built.append((wp, classify(wp)))
        all_faces = len(built) == 4 and all(r.stable_faces == {i} for i, (_, r) in enumerate(built))
        if bool(paths) != all_faces:
            out.equivalence_failures.append(t)
        random_reports = [classify(WeightedPolyhedron(t, random_interior_point(rng, t)))
                          for _ in range(centers_per_tetrahedron)]
        if not paths:
            out.random_s1_on_path_free += sum(r.S == 1 for r in random_reports)
        out.equivalence_seconds += time.perf_counter() - start

        out.with_path += bool(paths)
        for wp, report in built:
            out.monostable.append((t, wp, report))
        cycles = find_obtuse_cycles(t)
        out.with_cycle += bool(cycles)
        out.both += bool(paths) and bool(cycles)
        if cycles:
            try:
                wp = monounstable_weighting(t, cycles[0])
                report = classify(wp)
                out.monounstable.append((t, wp, report))
                out.u1_signature_multisets.append(_signature_multiset(t))
            except SearchExhausted:
                out.unstable_search_failures += 1
        else:
            out.random_u1_on_cycle_free += sum(r.U == 1 for r in random_reports)
        for r in random_reports:
            if r.U == 1:
                out.u1_signature_multisets.append(_signature_multiset(t))
    return out


def criterion_5(n: int = 10_000, seed: int = DEFAULT_SEED) -> CriterionResult:
    s = tetra_survey(n, seed)
    ok = not s.equivalence_failures and s.random_s1_on_path_free == 0 and s.equivalence_seconds < 60
    return CriterionResult(5, "obtuse path <=> monostable on every face", ok,
                           f"{s.with_path}/{n} tetrahedra have a path, {len(s.equivalence_failures)} "
                           f"counterexamples, {s.random_s1_on_path_free} path-free S=1 draws (limit 60 s)",
                           s.equivalence_seconds)


def criterion_6(n: int = 10_000, seed: int = DEFAULT_SEED) -> CriterionResult:
    s = tetra_survey(n, seed)
    bad_mono = sum(1 for _, _, r in s.monostable if r.U != 2 or r.H != 1)
    bad_unst = sum(1 for _, _, r in s.monounstable if r.S != 2)
    ok = bad_mono == 0 and bad_unst == 0 and s.monostable and s.monounstable
    return CriterionResult(6, "monostable => U=2, mono-unstable => S=2", ok,
                           f"{len(s.monostable)} monostable ({bad_mono} bad), "
                           f"{len(s.monounstable)} mono-unstable ({bad_unst} bad)")


def criterion_7(n: int = 10_000, seed: int = DEFAULT_SEED) -> CriterionResult:
    s = tetra_survey(n, seed)
    hits = [name for ms in s.u1_signature_multisets for name, case in FORBIDDEN_CASES.items() if ms == case]
    ok = s.both == 0 and not hits
    return CriterionResult(7, "no tetrahedron has both a path and a cycle", ok,
                           f"{s.both} with both, {len(s.u1_signature_multisets)} U=1 instances, "
                           f"{len(hits)} in forbidden cases II/IV/V")


def criterion_8(n: int = 10_000, seed: int = DEFAULT_SEED) -> CriterionResult:
    s = tetra_survey(n, seed)
    notes, ok = [], True
    for name, wp in (("I", fixtures.cycle_case_I()), ("III", fixtures.cycle_case_III())):
        cycles = find_obtuse_cycles(wp.shape)
        target = [c for c in cycles if c.vertices[0] == 0]
        try:
            got = classify(monounstable_weighting(wp.shape, target[0]))
            good = got.unstable_vertices == {0} and got.reliable
        except (IndexError, GeometryError):
            good = False
        ok &= good
        notes.append(f"case {name} U={{A}}: {good}")
    ok &= s.random_u1_on_cycle_free == 0 and s.unstable_search_failures == 0
    notes.append(f"{s.with_cycle}/{n} sampled have a cycle, all constructed: {s.unstable_search_failures == 0}")
    notes.append(f"cycle-free U=1 draws: {s.random_u1_on_cycle_free}")
    return CriterionResult(8, "obtuse cycle <=> mono-unstable", ok, "; ".join(notes))


def criterion_9(n: int = 1000, seed: int = DEFAULT_SEED) -> CriterionResult:
    rng = random.Random(seed + 9)
    start = time.perf_counter()
    prop_bad = involution_bad = 0
    for _ in range(n):
        wp, _ = random_classified_polyhedron(rng)
        if not check_prop_polar(wp):
            prop_bad += 1
        dual, _ = polar_dual(wp)
        back, _ = polar_dual(dual)
        if back.shape.vertices != wp.shape.translated(-wp.center).vertices:
            involution_bad += 1
    elapsed = time.perf_counter() - start
    ok = prop_bad == 0 and involution_bad == 0
    return CriterionResult(9, "polar duality swaps face and vertex equilibria", ok,
                           f"{prop_bad} correspondence failures, {involution_bad} non-identity double duals "
                           f"over {n}", elapsed)


def _tip_problems(wp: WeightedPolyhedron) -> list[str]:
    report = classify(wp)
    if report.S != 1:
        return [f"S={report.S}"]
    (home,) = report.stable_faces
    problems = []
    for start in range(wp.shape.num_faces):
        try:
            path = tip_path(wp, start)
        except GeometryError as exc:
            problems.append(f"face {start}: {type(exc).__name__}")
            continue
        heights = [resting_height2(wp, f) for f in path.faces()]
        if path.terminal_face != home or len(path.steps) > 3:
            problems.append(f"face {start}: ends on {path.terminal_face} after {len(path.steps)}")
        if any(b >= a for a, b in zip(heights, heights[1:])):
            problems.append(f"face {start}: height does not drop")
    return problems


def criterion_10(n: int = 10_000, seed: int = DEFAULT_SEED) -> CriterionResult:
    s = tetra_survey(n, seed)
    start = time.perf_counter()
    cases = [fixtures.t0()] + [monostable_weighting(fixtures.t0().shape, f) for f in range(4)]
    cases += [wp for _, wp, _ in s.monostable]
    problems = []
    for wp in cases:
        problems += _tip_problems(wp)
    elapsed = time.perf_counter() - start
    return CriterionResult(10, "monostable tetrahedra roll home in <= 3 steps", not problems,
                           f"{len(cases)} weightings x 4 start faces, {len(problems)} problems"
                           + (f": {problems[:3]}" if problems else ""), elapsed)


def criterion_11(limit: int = 12) -> CriterionResult:
    generator._generate.cache_clear()
    start = time.perf_counter()
    failures, count = [], 0
    for v in range(4, limit + 1):
        for f in range(4, limit + 1):
            if (f, v) == (4, 4) or not is_legal(FaceVector(f, f + v - 2, v)):
                continue
            count += 1
            try:
                wp = generator.generate_mono_monostatic(f, v)
                report = classify(wp)
                if face_vector(wp.shape).as_tuple() != (f, f + v - 2, v) or (report.S, report.U) != (1, 1):
                    failures.append((f, v))
            except GeometryError:
                failures.append((f, v))
    try:
        generator.generate_mono_monostatic(4, 4)
        rejected = False
    except ExcludedTetrahedron:
        rejected = True
    elapsed = time.perf_counter() - start
    ok = not failures and rejected and elapsed < 60
    return CriterionResult(11, f"mono-monostatic for every legal (f,v), f,v <= {limit}", ok,
                           f"{count - len(failures)}/{count} built and verified, (4,4) rejected: {rejected} "
                           f"(limit 60 s)", elapsed)


def criterion_12(n: int = 100_000, seed: int = DEFAULT_SEED) -> CriterionResult:
    rng = random.Random(seed + 12)
    start = time.perf_counter()
    violations, cells, generic = 0, Counter(), 0
    for _ in range(n):
        try:
            tri = classify_spherical_triangle(random_direction(rng), random_direction(rng), random_direction(rng))
        except DegenerateDirections:
            continue
        if not tri.generic:
            continue
        generic += 1
        violations += bool(lemma_violations(tri))
        cells[(tri.long_edges, tri.obtuse_angles)] += 1
    missing = sorted(ADMISSIBLE_SIGNATURES - set(cells))
    elapsed = time.perf_counter() - start
    ok = violations == 0 and not missing
    return CriterionResult(12, "spherical triangle facts and admissible-cell witnesses", ok,
                           f"{violations} violations in {generic} generic triangles, "
                           f"missing witnesses: {missing or 'none'}", elapsed)


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12)


def run_all(seed: int = DEFAULT_SEED, echo=None) -> list[CriterionResult]:
    results = []
    for fn in CRITERIA:
        kwargs = {"seed": seed} if "seed" in fn.__code__.co_varnames else {}
        result = fn(**kwargs)
        results.append(result)
        if echo is not None:
            echo(result.line())
    return results
