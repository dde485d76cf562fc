"""Standard comodules: injective-type J's, projective-type F's, the model
algebra H, simples and suspensions, and the canonical maps between them.

Over the w = 0 quotient:

* ``J(a, b)`` is spanned by the monomials of left bidegree (a, b), graded by
  right bidegree, with the coproduct itself as coaction.  It is finite and
  co-represents evaluation: hom(M, J(a,b)) has the dimension of M_{(a,b)}.
* ``F(a, b)`` is the graded dual of the left comodule spanned by the
  monomials of right bidegree (a, b); it represents evaluation and is
  infinite, so it carries a truncation box.

``Jn``/``Fn`` are the singly graded versions over the quotient that also
identifies x0 with u^2.  ``H`` is the exterior-times-polynomial comodule
algebra on two generators y, x over the full bialgebra (at p = 2, the
polynomial algebra on x over its F_2 analogue).
"""

from __future__ import annotations

from itertools import combinations

from .bialgebra import (
    Monomial,
    coproduct,
    format_monomial,
    get_preset,
    mono_tau,
    mono_u,
    mono_w,
    mono_xi,
    parse_monomial,
    product,
    total_of,
)
from .comodule import (
    Comodule,
    ComoduleMorphism,
    LeftComodule,
    dualize_left,
    morphism_from_assignment,
    simple_comodule,
    suspend,
    corestrict_psi,
    corestrict_theta,
    tensor,
)

# ---------------------------------------------------------------------------
# J-type objects


def build_J(p: int, a: int, b: int) -> Comodule:
    """Monomials of left bidegree (a, b), coacted on by the coproduct."""
    from .bialgebra import enumerate_left

    preset = get_preset("bbar", p)
    span = enumerate_left(preset, (a, b))
    labels = {m: format_monomial(m) for m in span}
    components: dict = {}
    for m in span:
        components.setdefault(preset.right_degree(m), []).append(labels[m])
    coaction = {}
    for m in span:
        terms = []
        for (m1, b2), c in coproduct(preset, m).items():
            terms.append((c, labels[m1], b2))
        coaction[labels[m]] = terms
    return Comodule(preset, components, coaction, box=None, name=f"J({a},{b})")


def build_Jn(p: int, n: int) -> Comodule:
    """Single-graded analogue of build_J over the x0 = u^2 quotient."""
    from .bialgebra import enumerate_left

    preset = get_preset("atilde", p)
    span = enumerate_left(preset, n)
    labels = {m: format_monomial(m) for m in span}
    components: dict = {}
    for m in span:
        components.setdefault(preset.right_degree(m), []).append(labels[m])
    coaction = {}
    for m in span:
        coaction[labels[m]] = [
            (c, labels[m1], b2) for (m1, b2), c in coproduct(preset, m).items()
        ]
    return Comodule(preset, components, coaction, box=None, name=f"J{n}")


# ---------------------------------------------------------------------------
# F-type objects


def _right_component_span_bbar(p: int, a: int, b: int, box: int):
    """Monomials with right bidegree (a, b) and left total degree <= box."""
    preset = get_preset("bbar", p)
    out = []
    imax = 0
    while 2 * p ** (imax + 1) <= box:
        imax += 1
    tau_indices = [i for i in range(imax + 1) if 2 * p**i <= box]
    xi_indices = [j for j in range(imax + 2) if 2 * p**j <= box]

    def xi_multisets(size: int, min_j: int):
        if size == 0:
            yield ()
            return
        for j in [j for j in xi_indices if j >= min_j]:
            for rest in xi_multisets(size - 1, j):
                merged = dict(rest)
                merged[j] = merged.get(j, 0) + 1
                yield tuple(sorted(merged.items()))

    for k in range(min(a, len(tau_indices)) + 1):
        for S in combinations(tau_indices, k):
            u = a - k
            for xi in set(xi_multisets(b, 0)):
                m = Monomial(0, S, u, xi)
                if total_of(preset.left_degree(m)) <= box:
                    out.append(m)
    return preset, sorted(set(out), key=Monomial.sort_key)


def build_F(p: int, a: int, b: int, box: int) -> Comodule:
    """Dual of the left comodule on the right-(a, b) monomials, truncated."""
    preset, span = _right_component_span_bbar(p, a, b, box)
    labels = {m: format_monomial(m) for m in span}
    components: dict = {}
    for m in span:
        components.setdefault(preset.left_degree(m), []).append(labels[m])
    coaction = {}
    for m in span:
        terms = []
        for (b1, m2), c in coproduct(preset, m).items():
            if m2 in labels:
                terms.append((c, b1, labels[m2]))
        coaction[labels[m]] = terms
    N = LeftComodule(preset, components, coaction, box=box, name=f"F({a},{b})-predual")
    return dualize_left(N, box=box, name=f"F({a},{b})")


def _right_component_span_atilde(p: int, n: int, box: int):
    """Monomials over the single-graded quotient with right degree n and
    left degree <= box."""
    preset = get_preset("atilde", p)
    out = []
    imax = 0
    while 2 * p ** (imax + 1) <= box:
        imax += 1
    tau_indices = [i for i in range(imax + 1) if 2 * p**i <= box]
    xi_indices = [j for j in range(1, imax + 2) if 2 * p**j <= box]

    def xi_multisets(size: int, min_pos: int):
        if size == 0:
            yield ()
            return
        for pos in range(min_pos, len(xi_indices)):
            for rest in xi_multisets(size - 1, pos):
                merged = dict(rest)
                j = xi_indices[pos]
                merged[j] = merged.get(j, 0) + 1
                yield tuple(sorted(merged.items()))

    for k in range(min(n, len(tau_indices)) + 1):
        for S in combinations(tau_indices, k):
            rem = n - k
            for e_total in range(rem // 2 + 1):
                for xi in set(xi_multisets(e_total, 0)):
                    m = Monomial(0, S, rem - 2 * e_total, xi)
                    if total_of(preset.left_degree(m)) <= box:
                        out.append(m)
    return preset, sorted(set(out), key=Monomial.sort_key)


def build_Fn(p: int, n: int, box: int) -> Comodule:
    """Single-graded representing object, dual to the right-degree-n span."""
    preset, span = _right_component_span_atilde(p, n, box)
    labels = {m: format_monomial(m) for m in span}
    components: dict = {}
    for m in span:
        components.setdefault(preset.left_degree(m), []).append(labels[m])
    coaction = {}
    for m in span:
        terms = []
        for (b1, m2), c in coproduct(preset, m).items():
            if m2 in labels:
                terms.append((c, b1, labels[m2]))
        coaction[labels[m]] = terms
    N = LeftComodule(preset, components, coaction, box=box, name=f"F{n}-predual")
    return dualize_left(N, box=box, name=f"F{n}")


# ---------------------------------------------------------------------------
# the model algebra H


def h_label(eps: int, m: int) -> str:
    if eps and m:
        return f"y*x^{m}" if m > 1 else "y*x"
    if eps:
        return "y"
    if m:
        return f"x^{m}" if m > 1 else "x"
    return "1"


def build_H(p: int, box: int) -> Comodule:
    """The comodule algebra Lambda(y) (x) F[x] over the full bialgebra,
    with psi(y) = y (x) u + sum x^{p^i} (x) t_i and
    psi(x) = y (x) w + sum x^{p^j} (x) x_j.  At p = 2 this is F_2[x] with
    psi(x) = sum x^{2^j} (x) x_j.  Stored one layer past the box."""
    if p == 2:
        return _build_H2(box)
    preset = get_preset("b", p)
    bound = box + 1

    def mul(t1: dict, t2: dict) -> dict:
        out: dict = {}
        for (e1, m1, b1), c1 in t1.items():
            pb = b1.parity
            for (e2, m2, b2), c2 in t2.items():
                if e1 and e2:
                    continue
                e, m = e1 + e2, m1 + m2
                if e + 2 * m > bound:
                    continue
                sign = -1 if (pb and e2) else 1
                s, b = product(b1, b2)
                if not s:
                    continue
                key = (e, m, b)
                v = (out.get(key, 0) + c1 * c2 * sign * s) % p
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return out

    psi_y = {(1, 0, mono_u()): 1}
    i = 0
    while 2 * p**i <= bound:
        psi_y[(0, p**i, mono_tau(i))] = 1
        i += 1
    psi_x = {(1, 0, mono_w()): 1}
    j = 0
    while 2 * p**j <= bound:
        psi_x[(0, p**j, mono_xi(j))] = 1
        j += 1

    powers = [{(0, 0, Monomial()): 1}]
    while 2 * len(powers) <= bound:
        powers.append(mul(powers[-1], psi_x))

    components: dict = {}
    coaction: dict = {}
    for m in range(bound // 2 + 1):
        for eps in (0, 1):
            if eps + 2 * m > bound:
                continue
            lab = h_label(eps, m)
            components.setdefault((eps, m), []).append(lab)
            ts = mul(psi_y, powers[m]) if eps else powers[m]
            coaction[lab] = [(c, h_label(e2, m2), b) for (e2, m2, b), c in ts.items()]
    return Comodule(preset, components, coaction, box=box, margin=1, name="H")


def _build_H2(box: int) -> Comodule:
    preset = get_preset("b2", 2)

    def mul(t1: dict, t2: dict) -> dict:
        out: dict = {}
        for (m1, b1), c1 in t1.items():
            for (m2, b2), c2 in t2.items():
                m = m1 + m2
                if m > box:
                    continue
                s, b = product(b1, b2)
                key = (m, b)
                v = (out.get(key, 0) + c1 * c2 * s) % 2
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return out

    psi_x = {}
    j = 0
    while 2**j <= box:
        psi_x[(2**j, mono_xi(j))] = 1
        j += 1
    powers = [{(0, Monomial()): 1}]
    while len(powers) <= box:
        powers.append(mul(powers[-1], psi_x))
    components: dict = {}
    coaction: dict = {}
    for m in range(box + 1):
        lab = h_label(0, m)
        components.setdefault(m, []).append(lab)
        coaction[lab] = [(c, h_label(0, m2), b) for (m2, b), c in powers[m].items()]
    return Comodule(preset, components, coaction, box=box, margin=0, name="H")


def build_H_tensor(p: int, n: int, box: int) -> Comodule:
    if n < 1:
        raise ValueError("tensor power needs n >= 1")
    H = build_H(p, box)
    out = H
    for _ in range(n - 1):
        out = tensor(out, H)
    out.name = f"H^(x){n}" if n > 1 else "H"
    return out


def psi_H(p: int, box: int) -> Comodule:
    """H pushed down to the w = 0 quotient."""
    return corestrict_psi(build_H(p, box), name="Psi(H)")


def theta_psi_H(p: int, box: int) -> Comodule:
    """H pushed all the way down to the single-graded quotient."""
    return corestrict_theta(psi_H(p, box), name="Theta(Psi(H))")


# ---------------------------------------------------------------------------
# canonical morphisms


def cap_morphism(p: int, lam: Monomial | str) -> ComoduleMorphism:
    """Contraction against lam: J(0, m) -> J(right(lam)) for left(lam) = (0, m),
    sending m' to the coefficient of lam (x) - in the coproduct of m'."""
    if isinstance(lam, str):
        lam = parse_monomial(lam)
    preset = get_preset("bbar", p)
    la, lb = preset.left_degree(lam)
    if la != 0:
        raise ValueError(f"contraction element must have left bidegree (0, m), got {lam}")
    source = build_J(p, 0, lb)
    ra, rb = preset.right_degree(lam)
    target = build_J(p, ra, rb)
    assign: dict = {}
    for mp in _span_of_J(p, 0, lb):
        terms = []
        for (b1, b2), c in coproduct(preset, mp).items():
            if b1 == lam:
                terms.append((c, format_monomial(b2)))
        assign[format_monomial(mp)] = terms
    return morphism_from_assignment(source, target, assign)


def _span_of_J(p: int, a: int, b: int):
    from .bialgebra import enumerate_left

    return enumerate_left(get_preset("bbar", p), (a, b))


def verschiebung(p: int, n: int) -> ComoduleMorphism:
    """V_n = contraction against x1^n: J(0, np) -> J(0, n)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return cap_morphism(p, Monomial(xi=((1, n),)))


def verschiebung_twisted(p: int, n: int) -> ComoduleMorphism:
    """V'_n = contraction against t0*x1^n: J(0, np+1) -> J(1, n)."""
    return cap_morphism(p, Monomial(tau=(0,), xi=((1, n),) if n else ()))


def xi0_multiplication(p: int, m: int) -> ComoduleMorphism:
    """Multiplication by x0, as S^{(0,1)} J(0, m-1) -> J(0, m)."""
    if m < 1:
        raise ValueError("need m >= 1")
    source_core = build_J(p, 0, m - 1)
    source = suspend(source_core, (0, 1))
    target = build_J(p, 0, m)
    assign = {}
    for mp in _span_of_J(p, 0, m - 1):
        s, prod = product(mono_xi(0), mp)
        assign[f"s|{format_monomial(mp)}"] = [(s, format_monomial(prod))]
    return morphism_from_assignment(source, target, assign)


def u_suspension_iso(p: int, n: int) -> ComoduleMorphism:
    """The canonical identification S^{(1,0)} J(0, n) -> J(1, n), s|m -> u*m."""
    source = suspend(build_J(p, 0, n), (1, 0))
    target = build_J(p, 1, n)
    assign = {}
    for mp in _span_of_J(p, 0, n):
        s, prod = product(mono_u(), mp)
        assign[f"s|{format_monomial(mp)}"] = [(s, format_monomial(prod))]
    return morphism_from_assignment(source, target, assign)


# ---- the mu family and the canonical l / r maps


def _xi0_rewrite_image(m: Monomial) -> Monomial:
    """The monomial with every x0 replaced by u^2."""
    d = m.xi_dict()
    e0 = d.pop(0, 0)
    return Monomial(m.w, m.tau, m.u + 2 * e0, tuple(sorted(d.items())))


def _xi0_rewrite_preimage(m: Monomial, a: int, b: int) -> Monomial | None:
    """The unique monomial with right bidegree (a, b) mapping to m under the
    x0 -> u^2 rewrite, if any."""
    e_high = sum(e for j, e in m.xi)
    e0 = b - e_high
    if e0 < 0:
        return None
    u = m.u - 2 * e0
    if u < 0 or u + len(m.tau) != a:
        return None
    xi = tuple(sorted(([(0, e0)] if e0 else []) + list(m.xi)))
    return Monomial(m.w, m.tau, u, xi)


def theta_F(p: int, a: int, b: int, box: int) -> Comodule:
    return corestrict_theta(build_F(p, a, b, box), name=f"Theta(F({a},{b}))")


def theta_J(p: int, a: int, b: int) -> Comodule:
    return corestrict_theta(build_J(p, a, b), name=f"Theta(J({a},{b}))")


def mu_quotient(p: int, n: int, a: int, b: int, box: int,
                target: Comodule | None = None,
                source: Comodule | None = None) -> ComoduleMorphism:
    """The quotient F(n) -> Theta F(a, b) dual to rewriting x0 as u^2 on the
    right-(a, b) monomials, for a + 2b = n."""
    if a + 2 * b != n:
        raise ValueError("need a + 2b = n")
    source = source or build_Fn(p, n, box)
    target = target or theta_F(p, a, b, box)
    assign: dict = {}
    _, span = _right_component_span_atilde(p, n, box)
    for m in span:
        pre = _xi0_rewrite_preimage(m, a, b)
        lab = format_monomial(m)
        if pre is not None and format_monomial(pre) in target._deg_of:
            assign[lab] = [(1, format_monomial(pre))]
        else:
            assign[lab] = []
    return morphism_from_assignment(source, target, assign)


def canonical_l(p: int, a: int, b: int, box: int,
                source: Comodule | None = None,
                target: Comodule | None = None) -> ComoduleMorphism:
    """The generator F(a,b) -> S^{(2,0)} F(a-2,b), dual to multiplying the
    right-(a-2, b) span by u^2; it divides the dual basis by u^2."""
    if a < 2:
        raise ValueError("need a >= 2")
    source = source or build_F(p, a, b, box)
    target = target or suspend(build_F(p, a - 2, b, box), (2, 0))
    assign: dict = {}
    _, span = _right_component_span_bbar(p, a, b, box)
    for m in span:
        lab = format_monomial(m)
        if m.u >= 2:
            quo = Monomial(m.w, m.tau, m.u - 2, m.xi)
            tl = f"s|{format_monomial(quo)}"
            assign[lab] = [(1, tl)] if tl in target._deg_of else []
        else:
            assign[lab] = []
    return morphism_from_assignment(source, target, assign)


def canonical_r(p: int, a: int, b: int, box: int,
                source: Comodule | None = None,
                target: Comodule | None = None) -> ComoduleMorphism:
    """The generator F(a,b) -> S^{(0,1)} F(a,b-1), dual to multiplying the
    right-(a, b-1) span by x0; it divides the dual basis by x0."""
    if b < 1:
        raise ValueError("need b >= 1")
    source = source or build_F(p, a, b, box)
    target = target or suspend(build_F(p, a, b - 1, box), (0, 1))
    assign: dict = {}
    _, span = _right_component_span_bbar(p, a, b, box)
    for m in span:
        lab = format_monomial(m)
        d = m.xi_dict()
        if d.get(0, 0) >= 1:
            d[0] -= 1
            quo = Monomial(m.w, m.tau, m.u, tuple(sorted((j, e) for j, e in d.items() if e)))
            tl = f"s|{format_monomial(quo)}"
            assign[lab] = [(1, tl)] if tl in target._deg_of else []
        else:
            assign[lab] = []
    return morphism_from_assignment(source, target, assign)


def canonical_u(p: int, a: int, b: int, box: int,
                source: Comodule | None = None,
                target: Comodule | None = None) -> ComoduleMorphism:
    """The surjection F(a,b) -> S^{(1,0)} F(a-1,b), dual to multiplying the
    right-(a-1, b) span by u; it divides the dual basis by u."""
    if a < 1:
        raise ValueError("need a >= 1")
    source = source or build_F(p, a, b, box)
    target = target or suspend(build_F(p, a - 1, b, box), (1, 0))
    assign: dict = {}
    _, span = _right_component_span_bbar(p, a, b, box)
    for m in span:
        lab = format_monomial(m)
        if m.u >= 1:
            quo = Monomial(m.w, m.tau, m.u - 1, m.xi)
            tl = f"s|{format_monomial(quo)}"
            assign[lab] = [(1, tl)] if tl in target._deg_of else []
        else:
            assign[lab] = []
    return morphism_from_assignment(source, target, assign)


def build_PhiF(p: int, a: int, box: int):
    """Kernel of the canonical l on F(a, 0), with its inclusion; for
    a in {0, 1} this is all of F(a, 0)."""
    if a < 2:
        F = build_F(p, a, 0, box)
        F.name = f"PhiF({a})"
        from .comodule import identity_morphism

        return F, identity_morphism(F)
    from .homsolver import kernel

    f = canonical_l(p, a, 0, box)
    K, incl = kernel(f, name=f"PhiF({a})")
    return K, incl


# ---------------------------------------------------------------------------
# object ids (shared by the command line and the verifier)


def parse_object_id(text: str, p: int, box: int) -> Comodule:
    """Build a standard object from its id.

    Supported:  H | H^k | F:a,b | J:a,b | Fn:n | Jn:n | S:a,b | PhiF:a
    """
    text = text.strip()
    if text == "H":
        return build_H(p, box)
    if text.startswith("H^"):
        return build_H_tensor(p, int(text[2:]), box)
    head, _, rest = text.partition(":")
    if not rest:
        raise ValueError(f"unrecognized object id {text!r}")
    args = [int(x) for x in rest.split(",")]
    if head == "F" and len(args) == 2:
        return build_F(p, args[0], args[1], box)
    if head == "J" and len(args) == 2:
        return build_J(p, args[0], args[1])
    if head == "Fn" and len(args) == 1:
        return build_Fn(p, args[0], box)
    if head == "Jn" and len(args) == 1:
        return build_Jn(p, args[0])
    if head == "S" and len(args) == 2:
        return simple_comodule(get_preset("bbar", p), (args[0], args[1]))
    if head == "PhiF" and len(args) == 1:
        return build_PhiF(p, args[0], box)[0]
    raise ValueError(f"unrecognized object id {text!r}")
