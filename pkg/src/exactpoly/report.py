"""The fixed list of verification checks behind ``verify-paper``."""
from __future__ import annotations

import json
import random
import signal
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import fixtures as fx
from .affine_bridge import make_instance, random_instance, verify_theorem2
from .ef_analysis import (EQ_AS_TWO, EQ_SEPARATE, count_inequalities, fit_linear_map,
                          image_under_map, is_degenerate_ef, is_ef_exists, is_ef_linear_map,
                          is_ef_standard, lifts)
from .exact_arith import RatMatrix, format_rational
from .polyhedron import membership_h, polyhedra_equal, remove_redundancy, to_hrep
from .projection import fourier_motzkin
from .representations import HPolyhedron, VPolyhedron, ge, le
from .tsp_model import verify_theorem1

DEFAULT_SEED = 42
DEFAULT_N_MAX = 6
THM2_INSTANCES = 50


@dataclass
class CheckResult:
    check_id: str
    claim: str
    holds: bool
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_json(self, timings: bool = False) -> dict:
        out = {"check_id": self.check_id, "claim": self.claim, "holds": self.holds,
               "details": _jsonable(self.details)}
        if timings:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _pt(p) -> str:
    return "(" + ", ".join(format_rational(Fraction(x)) for x in p) + ")"


# -- individual checks ---------------------------------------------------------

def check_theorem1(n: int) -> tuple[bool, dict]:
    r = verify_theorem1(n)
    return r.holds, {
        "n": n, "vertices": r.vertex_count, "expected": r.expected_count,
        "integral": r.all_integral, "permutation_matrices": r.all_permutations,
        "bijection": r.bijection, "round_trips": r.round_trips,
    }


def check_theorem2(seed: int, instances: int = THM2_INSTANCES) -> tuple[bool, dict]:
    rng = random.Random(seed)
    failures = []
    dims = []
    for k in range(instances):
        dim = 1 + k % 5
        inst = random_instance(rng, dim)
        rep = verify_theorem2(inst.x_set, inst.y_set, inst.graph, inst.alpha)
        dims.append(dim)
        if not rep.holds:
            failures.append({"instance": k, "dim": dim, "note": rep.note})
    # segment instance: x = (4, 5, 3) y with y in [2, 3]
    seg = make_instance(fx.SEGMENT_Y, RatMatrix.column(fx.SEGMENT_DIRECTION), (0, 0, 0), (1, 0, 0))
    seg_rep = verify_theorem2(fx.P_H_DISPLAY, fx.SEGMENT_Y, seg.graph, (1, 0, 0))
    ok = not failures and seg_rep.holds and seg_rep.direct_value == 8
    return ok, {
        "seed": seed, "random_instances": instances, "failures": failures,
        "segment": {"direct": seg_rep.direct_value, "two_step": seg_rep.two_step_value,
                    "x_star": _pt(seg_rep.x_star) if seg_rep.x_star else None,
                    "y_star": _pt(seg_rep.y_star) if seg_rep.y_star else None},
    }


def check_ref1a() -> tuple[bool, dict]:
    verdict = is_ef_exists(fx.Q_H, fx.P_H_DISPLAY, fx.Q_X_COORDS)
    w = fx.WITNESS
    w_lifts = lifts(fx.Q_H, fx.Q_X_COORDS, w)
    w_in_p = membership_h(w, fx.P_H_DISPLAY)
    w_breaks_row = not fx.WITNESS_VIOLATED_ROW.satisfied_by(w)
    found = verdict.witness
    found_ok = (found is not None and lifts(fx.Q_H, fx.Q_X_COORDS, found)
                and not membership_h(found, fx.P_H_DISPLAY))
    ok = (not verdict.holds) and found_ok and w_lifts and not w_in_p and w_breaks_row
    return ok, {
        "biconditional_holds": verdict.holds,
        "computed_witness": _pt(found) if found is not None else None,
        "witness": _pt(w), "witness_lifts_into_Q": w_lifts, "witness_in_P": w_in_p,
        "violated_row": "3 x2 - 5 x3 = 0", "violated": w_breaks_row,
    }


def check_ref1b() -> tuple[bool, dict]:
    image = image_under_map(fx.PI, fx.Q_H)
    verdict = is_ef_linear_map(fx.Q_H, fx.P_V, fx.PI)
    same_as_display = polyhedra_equal(image, fx.P_H_DISPLAY)
    pairs = [((0, 0, 0, 2), fx.P_VERTICES[0]), ((0, 0, 0, 3), fx.P_VERTICES[1]),
             ((1, 0, 0, 0), (0, 0, 0)), ((0, 1, 0, 0), (0, 0, 0)), ((0, 0, 1, 0), (0, 0, 0))]
    fitted = fit_linear_map(pairs)
    refit = fitted is not None and fitted.matrix == fx.PI.matrix
    ok = verdict.holds and same_as_display and refit
    return ok, {
        "image_vertices": [_pt(v) for v in image.vertices],
        "image_equals_P": verdict.holds, "image_equals_display": same_as_display,
        "map_refitted_from_generators": refit,
    }


def check_ref1c() -> tuple[bool, dict]:
    std = is_ef_standard(fx.Q_H, fx.P_V, fx.Q_X_COORDS)
    ex = is_ef_exists(fx.Q_H, fx.P_V, fx.Q_X_COORDS)
    mp = is_ef_linear_map(fx.Q_H, fx.P_V, fx.PI)
    ok = (not std.holds) and (not ex.holds) and mp.holds
    return ok, {"standard": std.holds, "fiorini_exists": ex.holds, "fiorini_map": mp.holds,
                "standard_witness": _pt(std.witness) if std.witness else None}


def check_ref2() -> tuple[bool, dict]:
    shadow = fourier_motzkin(fx.Q_H, fx.Q_X_COORDS)
    whole = VPolyhedron.whole_space(3)
    is_whole = len(shadow.rows) == 0 and polyhedra_equal(shadow, whole)
    equals_p = polyhedra_equal(shadow, fx.P_V)
    ok = is_whole and not equals_p
    return ok, {"projection_rows": len(shadow.rows), "projection_is_R3": is_whole,
                "projection_equals_P": equals_p, "equivalence_holds": equals_p}


def check_ref3() -> tuple[bool, dict]:
    q_min = remove_redundancy(fx.Q_H)
    q_two = count_inequalities(q_min, EQ_AS_TWO)
    q_sep = count_inequalities(q_min, EQ_SEPARATE)
    p_two = count_inequalities(fx.P_H_DISPLAY, EQ_AS_TWO)
    p_sep = count_inequalities(fx.P_H_DISPLAY, EQ_SEPARATE)
    p_min = to_hrep(fx.P_V)
    pm_two = count_inequalities(p_min, EQ_AS_TWO)
    pm_sep = count_inequalities(p_min, EQ_SEPARATE)
    extension = is_ef_linear_map(fx.Q_H, fx.P_V, fx.PI).holds
    display_is_p = polyhedra_equal(fx.P_H_DISPLAY, fx.P_V)
    ok = (extension and display_is_p and q_two == 2 and p_two == 10 and p_sep == (8, 1)
          and q_two < p_two and q_sep[0] < p_sep[0])
    return ok, {
        "Q_minimal": {"eq_as_two": q_two, "eq_separate": list(q_sep)},
        "P_display": {"eq_as_two": p_two, "eq_separate": list(p_sep)},
        "P_minimal": {"eq_as_two": pm_two, "eq_separate": list(pm_sep)},
        "Q_extends_P_by_map": extension, "display_describes_P": display_is_p,
    }


def check_degen() -> tuple[bool, dict]:
    q_deg = is_degenerate_ef(fx.Q_H, fx.Q_X_COORDS)
    control = HPolyhedron(2, (le((1, 0), 5), le((1, 0), 7), ge((0, 1), 2), le((0, 1), 3)))
    c_deg = is_degenerate_ef(control, (0,))
    return q_deg and not c_deg, {"Q_degenerate": q_deg, "control_degenerate": c_deg}


CLAIMS = {
    "REF1a": "x in P <=> some y with (x, y) in Q fails; the witness lifts into Q but leaves P",
    "REF1b": "the image of Q under the 3x4 map equals P",
    "REF1c": "map-image and biconditional definitions disagree on (P, Q)",
    "REF2": "projection of Q onto x is all of R^3, not P",
    "REF3": "Q needs 2 inequalities while the 9-row description of P has 8 plus 1 equality",
    "DEGEN": "the minimal description of Q has zero coefficients on x",
    "THM2-random": "two-step optimization through Y matches direct optimization over X",
}


def check_list(seed: int = DEFAULT_SEED, n_max: int = DEFAULT_N_MAX) -> list[tuple[str, str, Callable]]:
    checks = []
    for n in range(3, n_max + 1):
        checks.append((f"THM1-n{n}",
                       f"assignment polytope vertices are the {n}-city tours rooted at 0",
                       lambda n=n: check_theorem1(n)))
    checks.append(("THM2-random", CLAIMS["THM2-random"], lambda: check_theorem2(seed)))
    for cid, fn in (("REF1a", check_ref1a), ("REF1b", check_ref1b), ("REF1c", check_ref1c),
                    ("REF2", check_ref2), ("REF3", check_ref3), ("DEGEN", check_degen)):
        checks.append((cid, CLAIMS[cid], fn))
    return checks


class CheckTimeout(Exception):
    pass


def _alarm(signum, frame):
    raise CheckTimeout()


def run_checks(seed: int = DEFAULT_SEED, n_max: int = DEFAULT_N_MAX,
               only: list[str] | None = None, timeout: float | None = None) -> list[CheckResult]:
    checks = check_list(seed, n_max)
    if only:
        known = {c[0] for c in checks}
        unknown = [c for c in only if c not in known]
        if unknown:
            raise KeyError(", ".join(unknown))
        checks = [c for c in checks if c[0] in set(only)]
    use_alarm = timeout is not None and hasattr(signal, "SIGALRM")
    results = []
    for cid, claim, fn in checks:
        start = time.perf_counter()
        if use_alarm:
            old = signal.signal(signal.SIGALRM, _alarm)
            signal.setitimer(signal.ITIMER_REAL, timeout)
        try:
            holds, details = fn()
        except CheckTimeout:
            holds, details = False, {"error": f"timed out after {timeout}s"}
        finally:
            if use_alarm:
                signal.setitimer(signal.ITIMER_REAL, 0)
                signal.signal(signal.SIGALRM, old)
        results.append(CheckResult(cid, claim, bool(holds), details, time.perf_counter() - start))
    return sorted(results, key=lambda r: r.check_id)


def render_json(results: list[CheckResult], seed: int, n_max: int, timings: bool = False) -> str:
    doc = {"seed": seed, "n_max": n_max, "all_hold": all(r.holds for r in results),
           "checks": [r.to_json(timings) for r in results]}
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def render_text(results: list[CheckResult]) -> str:
    width = max((len(r.check_id) for r in results), default=0)
    lines = []
    for r in results:
        status = "PASS" if r.holds else "FAIL"
        lines.append(f"{status}  {r.check_id:<{width}}  {r.claim}  [{r.elapsed:.2f}s]")
        for k, v in _jsonable(r.details).items():
            lines.append(f"      {k}: {v}")
    passed = sum(r.holds for r in results)
    lines.append(f"{passed}/{len(results)} checks hold")
    return "\n".join(lines) + "\n"
