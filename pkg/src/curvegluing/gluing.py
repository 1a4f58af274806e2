"""Gluings of numerical semigroups and mechanical theorem verification.

A gluing scales two semigroups by coprime members of each other and joins
the generator lists; a nice gluing additionally writes q as a multiple of
the smallest generator of the second semigroup, with multiplicity bounded by
the coefficient sum of a representation of p.  Instances are verified by
computing all tangent cones and Hilbert functions on both the component and
the glued side and checking every conclusion the hypotheses promise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from . import semigroup as sg
from .basis import standard_basis
from .errors import (GcdViolation, GeneratorCollision, NotInSemigroup,
                     PIsMinimalGenerator, QIsMinimalGenerator, SelfCheckFailed,
                     TheoremViolation)
from .hilbert import (HilbertData, local_hilbert_function,
                      product_factorization_check)
from .polyalg import Polynomial, negdegrevlex
from .tangentcone import TangentConeReport, tangent_cone
from .toric import (MonomialCurve, defining_ideal, ideals_equal,
                    minimal_generator_count)


@dataclass(frozen=True)
class GluingSpec:
    """A validated gluing (S1, S2, p, q) with witness representations."""

    s1: sg.NumericalSemigroup
    s2: sg.NumericalSemigroup
    p: int
    q: int
    b_witness: sg.Representation  # p over the generators of s1
    a_witness: sg.Representation  # q over the generators of s2
    nice: bool

    @property
    def glued_generators(self) -> tuple[int, ...]:
        return tuple(self.q * m for m in self.s1.generators) + \
            tuple(self.p * n for n in self.s2.generators)


def validate_gluing(s1, s2, p: int, q: int) -> GluingSpec:
    """Check every gluing condition and fix deterministic witnesses.

    Witnesses maximize the coefficient sum (ties broken lexicographically);
    when the gluing is nice the q-witness is concentrated on the smallest
    generator of s2 so the glued binomial leads with a pure power.
    """
    s1 = _as_semigroup(s1)
    s2 = _as_semigroup(s2)
    if p <= 0 or q <= 0:
        raise NotInSemigroup("p and q must be positive")
    if gcd(p, q) != 1:
        raise GcdViolation(f"gcd({p}, {q}) = {gcd(p, q)}")
    # collision is checked before membership: once p, q pass the remaining
    # clauses a collision is impossible (gcd(p,q)=1 would force p | m_i and
    # p in S1 then makes m_i a sum of members, contradicting minimality)
    scaled1 = {q * m for m in s1.generators}
    scaled2 = {p * n for n in s2.generators}
    collision = scaled1 & scaled2
    if collision:
        raise GeneratorCollision(
            f"scaled generator sets share {sorted(collision)}")
    if p in s1.generators:
        raise PIsMinimalGenerator(f"p = {p} is a minimal generator of S1")
    if q in s2.generators:
        raise QIsMinimalGenerator(f"q = {q} is a minimal generator of S2")
    reps_p = s1.all_representations(p)
    if not reps_p:
        raise NotInSemigroup(f"p = {p} is not in S1 {list(s1.generators)}")
    reps_q = s2.all_representations(q)
    if not reps_q:
        raise NotInSemigroup(f"q = {q} is not in S2 {list(s2.generators)}")

    b = _max_size_witness(reps_p)
    n1 = s2.generators[0]
    nice = q % n1 == 0 and q // n1 <= b.size
    if nice:
        a_coeffs = [0] * len(s2.generators)
        a_coeffs[0] = q // n1
        a = sg.Representation(tuple(a_coeffs), q)
    else:
        a = _max_size_witness(reps_q)
    return GluingSpec(s1, s2, p, q, b, a, nice)


def _as_semigroup(s) -> sg.NumericalSemigroup:
    if isinstance(s, sg.NumericalSemigroup):
        return s
    return sg.minimal_generators(list(s))


def _max_size_witness(reps: list[sg.Representation]) -> sg.Representation:
    best_size = max(r.size for r in reps)
    return min((r for r in reps if r.size == best_size),
               key=lambda r: r.coefficients)


# --------------------------------------------------------------------------
# glued objects
# --------------------------------------------------------------------------

def glued_curve(spec: GluingSpec) -> MonomialCurve:
    """Monomial curve on the scaled generators, x-block then y-block."""
    l = len(spec.s1.generators)
    k = len(spec.s2.generators)
    names = tuple(f"x{i + 1}" for i in range(l)) + \
        tuple(f"y{j + 1}" for j in range(k))
    gens = spec.glued_generators
    minimal = sg.minimal_generators(list(gens)).generators
    if set(minimal) != set(gens) or len(set(gens)) != len(gens):
        raise SelfCheckFailed(
            f"glued generators {list(gens)} are not a minimal generating set")
    return MonomialCurve(gens, names)


def glued_ideal(spec: GluingSpec,
                g1: list[Polynomial] | None = None,
                g2: list[Polynomial] | None = None) -> list[Polynomial]:
    """Generators of the glued defining ideal: G1, G2, and the bridge binomial.

    ``g1``/``g2`` default to the computed defining ideals of the component
    curves; pass explicit lists to reuse known generators.  Component
    polynomials are re-indexed into the joint ring (x-block first).
    """
    l = len(spec.s1.generators)
    k = len(spec.s2.generators)
    if g1 is None:
        g1 = defining_ideal(component_curve(spec, 1))
    if g2 is None:
        g2 = defining_ideal(component_curve(spec, 2))
    out = [_embed(g, before=0, after=k) for g in g1]
    out += [_embed(g, before=l, after=0) for g in g2]
    bridge_x = tuple(spec.b_witness.coefficients) + (0,) * k
    bridge_y = (0,) * l + tuple(spec.a_witness.coefficients)
    out.append(Polynomial.term(1, bridge_x) - Polynomial.term(1, bridge_y))
    return out


def component_curve(spec: GluingSpec, which: int) -> MonomialCurve:
    if which == 1:
        gens = spec.s1.generators
        names = tuple(f"x{i + 1}" for i in range(len(gens)))
    else:
        gens = spec.s2.generators
        names = tuple(f"y{j + 1}" for j in range(len(gens)))
    return MonomialCurve(gens, names)


def _embed(g: Polynomial, before: int, after: int) -> Polynomial:
    pad_l, pad_r = (0,) * before, (0,) * after
    return Polynomial({pad_l + m + pad_r: c for m, c in g.terms.items()},
                      _clean=False)


def _paper_priority(nvars: int) -> tuple[int, ...]:
    """v2 > v3 > ... > vn > v1: index order with the first variable lowest."""
    return tuple(range(1, nvars)) + (0,)


def _theorem_priority(l: int, k: int) -> tuple[int, ...]:
    """y2 > ... > yk > y1 > x2 > ... > xl > x1 in the joint ring."""
    return tuple(range(l + 1, l + k)) + (l,) + tuple(range(1, l)) + (0,)


# --------------------------------------------------------------------------
# instance verification
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    spec: GluingSpec
    c1_cm: bool
    c2_cm: bool
    glued_cm: bool
    glued_cm_witness: Polynomial | None
    c1_hf_nondecreasing: bool
    c2_hf_nondecreasing: bool
    glued_hf_nondecreasing: bool
    glued_hilbert: HilbertData
    c1_hilbert: HilbertData
    c2_hilbert: HilbertData
    theorem1_applicable: bool
    theorem1_confirmed: bool | None
    theorem2_applicable: bool
    theorem2_confirmed: bool | None
    leading_ideal_decomposition_ok: bool | None
    factorization_ok: bool | None
    remark_smallest_ok: bool | None
    gorenstein: bool
    complete_intersection: bool
    ideal_cross_check: bool | None
    rossi_candidate: bool
    glued_report: TangentConeReport

    def theorems_hold(self) -> bool:
        return not (
            (self.theorem1_applicable and self.theorem1_confirmed is False)
            or (self.theorem2_applicable and self.theorem2_confirmed is False))


def verify_instance(spec: GluingSpec, cross_check_ideal: bool = True,
                    hf_prefix_len: int | None = None) -> VerificationReport:
    """Analyze one gluing instance and evaluate both theorems on it.

    Component bases use the index order (v2 > ... > vn > v1); the glued cone
    uses the canonical by-value order, and, for nice gluings, a second basis
    in the joint index order feeds the leading-ideal decomposition and the
    Hilbert-series factorization checks.
    """
    c1 = component_curve(spec, 1)
    c2 = component_curve(spec, 2)
    g1 = defining_ideal(c1)
    g2 = defining_ideal(c2)
    rep1 = tangent_cone(c1, priority=_paper_priority(c1.nvars), ideal_gens=g1)
    rep2 = tangent_cone(c2, priority=_paper_priority(c2.nvars), ideal_gens=g2)
    hd1 = local_hilbert_function(c1, hf_prefix_len, report=rep1)
    hd2 = local_hilbert_function(c2, hf_prefix_len, report=rep2)
    _self_check_cm_multiplicity(rep1, hd1)
    _self_check_cm_multiplicity(rep2, hd2)

    glued = glued_curve(spec)
    rosales = glued_ideal(spec, g1, g2)
    cross = None
    if cross_check_ideal:
        cross = ideals_equal(rosales, defining_ideal(glued), glued.nvars)
        if not cross:
            raise SelfCheckFailed(
                "glued generator set and eliminated defining ideal disagree")
    grep = tangent_cone(glued, ideal_gens=rosales)
    ghd = local_hilbert_function(glued, hf_prefix_len, report=grep)
    _self_check_cm_multiplicity(grep, ghd)

    thm1_applicable = spec.nice and rep1.is_cohen_macaulay and rep2.is_cohen_macaulay
    thm1_confirmed = grep.is_cohen_macaulay if thm1_applicable else None
    thm2_applicable = spec.nice and hd1.nondecreasing and rep2.is_cohen_macaulay
    thm2_confirmed = ghd.nondecreasing if thm2_applicable else None

    decomposition_ok = None
    factorization_ok = None
    remark_ok = None
    if spec.nice:
        remark_ok = _remark_smallest(spec)
        if thm2_applicable or thm1_applicable:
            decomposition_ok = _leading_decomposition_ok(spec, rep1, rep2,
                                                         rosales, glued)
        if thm2_applicable:
            factorization_ok = product_factorization_check(
                ghd, list(hd1.reduced_numerator), list(hd2.reduced_numerator),
                spec.a_witness.coefficients[0])

    glued_sg = sg.NumericalSemigroup(tuple(sorted(spec.glued_generators)))
    gorenstein = glued_sg.is_symmetric()
    ci = minimal_generator_count(rosales, glued.nvars) == glued.nvars - 1

    return VerificationReport(
        spec=spec,
        c1_cm=rep1.is_cohen_macaulay,
        c2_cm=rep2.is_cohen_macaulay,
        glued_cm=grep.is_cohen_macaulay,
        glued_cm_witness=grep.witness,
        c1_hf_nondecreasing=hd1.nondecreasing,
        c2_hf_nondecreasing=hd2.nondecreasing,
        glued_hf_nondecreasing=ghd.nondecreasing,
        glued_hilbert=ghd,
        c1_hilbert=hd1,
        c2_hilbert=hd2,
        theorem1_applicable=thm1_applicable,
        theorem1_confirmed=thm1_confirmed,
        theorem2_applicable=thm2_applicable,
        theorem2_confirmed=thm2_confirmed,
        leading_ideal_decomposition_ok=decomposition_ok,
        factorization_ok=factorization_ok,
        remark_smallest_ok=remark_ok,
        gorenstein=gorenstein,
        complete_intersection=ci,
        ideal_cross_check=cross,
        rossi_candidate=gorenstein and not ghd.nondecreasing,
        glued_report=grep,
    )


def _self_check_cm_multiplicity(rep: TangentConeReport, hd: HilbertData):
    smallest = min(rep.curve.generators)
    if rep.is_cohen_macaulay and hd.multiplicity != smallest:
        raise SelfCheckFailed(
            f"Cohen-Macaulay cone with multiplicity {hd.multiplicity} != "
            f"smallest generator {smallest} on {list(rep.curve.generators)}")
    if rep.is_cohen_macaulay and not hd.nondecreasing:
        raise SelfCheckFailed(
            f"Cohen-Macaulay cone with decreasing Hilbert function on "
            f"{list(rep.curve.generators)}")


def _remark_smallest(spec: GluingSpec) -> bool:
    qm1 = spec.q * spec.s1.generators[0]
    pn1 = spec.p * spec.s2.generators[0]
    return qm1 < pn1 and qm1 == min(spec.glued_generators)


def _leading_decomposition_ok(spec, rep1, rep2, rosales, glued) -> bool:
    """Glued leading ideal must be LM(G1) + LM(G2) + <y1^a1> (joint index order)."""
    l = len(spec.s1.generators)
    k = len(spec.s2.generators)
    order = negdegrevlex(l + k, _theorem_priority(l, k))
    basis = standard_basis(rosales, order)
    got = set(basis.leading_monomials())
    expect = {(*m, *(0,) * k) for m in rep1.lm_set}
    expect |= {(*(0,) * l, *m) for m in rep2.lm_set}
    a1 = spec.a_witness.coefficients[0]
    expect.add((*(0,) * l, a1, *(0,) * (k - 1)))
    return got == expect


# --------------------------------------------------------------------------
# family scans
# --------------------------------------------------------------------------

_LINEAR = re.compile(r"^\s*(?:(\d+)\s*\*?\s*)?([a-zA-Z]\w*)?\s*$")


@dataclass(frozen=True)
class LinearExpr:
    """coeff * parameter + const, parsed from text like "6*q + 7"."""

    coeff: int
    const: int
    text: str

    def __call__(self, value: int) -> int:
        return self.coeff * value + self.const


def parse_linear(text: str, parameter: str) -> LinearExpr:
    coeff = 0
    const = 0
    for sign, chunk in _signed_chunks(text):
        m = _LINEAR.match(chunk)
        if not m or (m.group(2) and m.group(2) != parameter):
            raise ValueError(f"cannot parse {text!r} as linear in {parameter!r}")
        if m.group(2):
            coeff += sign * int(m.group(1) or 1)
        elif m.group(1):
            const += sign * int(m.group(1))
        else:
            raise ValueError(f"empty term in {text!r}")
    return LinearExpr(coeff, const, text)


def _signed_chunks(text: str):
    text = text.strip()
    if not text:
        raise ValueError("empty expression")
    if text[0] not in "+-":
        text = "+" + text
    for piece in re.finditer(r"([+-])\s*([^+-]+)", text):
        yield (1 if piece.group(1) == "+" else -1), piece.group(2)


@dataclass(frozen=True)
class FamilyTemplate:
    """Declarative one-parameter family of gluing instances."""

    s1: tuple[int, ...]
    s2: tuple[int, ...]
    parameter: str
    p_expr: LinearExpr
    q_expr: LinearExpr
    start: int
    stop: int
    output: str | None = None

    @classmethod
    def from_config(cls, cfg: dict) -> "FamilyTemplate":
        param = cfg["parameter"]
        lo, hi = cfg["range"]
        return cls(
            s1=tuple(cfg["s1"]),
            s2=tuple(cfg["s2"]),
            parameter=param,
            p_expr=parse_linear(str(cfg["p"]), param),
            q_expr=parse_linear(str(cfg["q"]), param),
            start=int(lo),
            stop=int(hi),
            output=cfg.get("output"),
        )


def scan_instance(template: FamilyTemplate, value: int,
                  cross_check_ideal: bool = False) -> dict:
    """Run one family member; invalid parameters give a skip record."""
    from .errors import GluingError

    record: dict = {template.parameter: value,
                    "p": template.p_expr(value), "q": template.q_expr(value)}
    try:
        spec = validate_gluing(list(template.s1), list(template.s2),
                               template.p_expr(value), template.q_expr(value))
    except GluingError as exc:
        record.update(skipped=True, reason=exc.code, detail=str(exc))
        return record
    report = verify_instance(spec, cross_check_ideal=cross_check_ideal)
    record.update(skipped=False, **report_to_record(report))
    return record


def scan_family(template: FamilyTemplate, jobs: int = 1,
                cross_check_ideal: bool = False) -> list[dict]:
    """Verify every member of the family, in parameter order.

    Raises :class:`TheoremViolation` with a reproduction bundle if any
    instance falsifies an applicable theorem.
    """
    values = list(range(template.start, template.stop + 1))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_scan_worker,
                                    [(template, v, cross_check_ideal)
                                     for v in values]))
    else:
        records = [scan_instance(template, v, cross_check_ideal)
                   for v in values]
    for rec in records:
        if rec.get("skipped"):
            continue
        if rec["theorem1_applicable"] and rec["theorem1_confirmed"] is False:
            raise TheoremViolation(
                f"nice gluing with CM components produced a non-CM cone at "
                f"{template.parameter} = {rec[template.parameter]}", rec)
        if rec["theorem2_applicable"] and rec["theorem2_confirmed"] is False:
            raise TheoremViolation(
                f"nice gluing broke Hilbert-function monotonicity at "
                f"{template.parameter} = {rec[template.parameter]}", rec)
    return records


def _scan_worker(args):
    template, value, cross = args
    return scan_instance(template, value, cross)


def report_to_record(report: VerificationReport) -> dict:
    """Flatten a report into JSON-serializable primitives."""
    from .polyalg import polynomial_to_str

    spec = report.spec
    glued = report.glued_report.curve
    witness = report.glued_cm_witness
    return {
        "s1": list(spec.s1.generators),
        "s2": list(spec.s2.generators),
        "p": spec.p,
        "q": spec.q,
        "b_witness": list(spec.b_witness.coefficients),
        "a_witness": list(spec.a_witness.coefficients),
        "nice": spec.nice,
        "glued_generators": list(spec.glued_generators),
        "c1_cm": report.c1_cm,
        "c2_cm": report.c2_cm,
        "glued_cm": report.glued_cm,
        "glued_cm_witness": (polynomial_to_str(witness, glued.names,
                                               report.glued_report.order)
                             if witness is not None else None),
        "c1_hf_nondecreasing": report.c1_hf_nondecreasing,
        "c2_hf_nondecreasing": report.c2_hf_nondecreasing,
        "glued_hf_nondecreasing": report.glued_hf_nondecreasing,
        "glued_h": list(report.glued_hilbert.reduced_numerator),
        "glued_hf_prefix": list(report.glued_hilbert.hf_prefix),
        "multiplicity": report.glued_hilbert.multiplicity,
        "theorem1_applicable": report.theorem1_applicable,
        "theorem1_confirmed": report.theorem1_confirmed,
        "theorem2_applicable": report.theorem2_applicable,
        "theorem2_confirmed": report.theorem2_confirmed,
        "leading_ideal_decomposition_ok": report.leading_ideal_decomposition_ok,
        "factorization_ok": report.factorization_ok,
        "remark_smallest_ok": report.remark_smallest_ok,
        "gorenstein": report.gorenstein,
        "complete_intersection": report.complete_intersection,
        "ideal_cross_check": report.ideal_cross_check,
        "rossi_candidate": report.rossi_candidate,
    }
