"""Regenerates catalog.json from explicit matrices; every structural identity is asserted."""

import json
from pathlib import Path

import sympy as sp

I = sp.I


def s(x):
    x = sp.nsimplify(sp.expand(x))
    re, im = sp.re(x), sp.im(x)
    if im == 0:
        return str(re)
    if re == 0:
        return "i" if im == 1 else "-i" if im == -1 else f"{im} i"
    sign = "+" if im > 0 else "-"
    mag = abs(im)
    return f"{re}{sign}{'i' if mag == 1 else f'{mag} i'}"


def mat_out(m):
    return [[s(m[r, c]) for c in range(m.cols)] for r in range(m.rows)]


def br(a, b):
    return sp.expand(a * b - b * a)


def coords(m, basis):
    syms = sp.symbols(f"c0:{len(basis)}")
    expr = m - sum((c * b for c, b in zip(syms, basis)), sp.zeros(*m.shape))
    sol = sp.solve(list(expr), syms, dict=True)
    assert len(sol) == 1, "not in span"
    return [sp.nsimplify(sol[0].get(c, 0)) for c in syms]


def involution_matrix(basis, f, antilinear):
    cols = []
    for b in basis:
        cols.append(coords(sp.expand(f(b)), basis))
    m = sp.Matrix(cols).T
    return m


def check_realization(basis, sigma, theta):
    for a in basis:
        for b in basis:
            for f in (sigma, theta):
                assert sp.expand(f(br(a, b)) - br(f(a), f(b))) == sp.zeros(*a.shape)


def sigma_rule(x):
    return x.conjugate()


def theta_rule(x):
    return -x.T


def sl2():
    ER = sp.Matrix([[0, I], [0, 0]])
    FR = sp.Matrix([[0, 0], [-I, 0]])
    HR = sp.Matrix([[1, 0], [0, -1]])
    Et = sp.Rational(1, 2) * sp.Matrix([[1, I], [I, -1]])
    Ft = sp.Rational(1, 2) * sp.Matrix([[1, -I], [-I, -1]])
    Ht = sp.Matrix([[0, -I], [I, 0]])
    t1 = sp.Matrix([[0, 1], [-1, 0]])
    basis = [Ht, Et, Ft]
    check_realization(basis, sigma_rule, theta_rule)
    S = involution_matrix(basis, lambda b: sigma_rule(b), True)
    T = involution_matrix(basis, theta_rule, False)
    assert br(Ht, Et) == 2 * Et and br(Et, Ft) == Ht
    J = sp.Matrix([[0, 1], [-1, 0]])
    named = {"ER": ER, "FR": FR, "HR": HR, "Etheta": Et, "Ftheta": Ft, "Htheta": Ht, "t1": t1}
    entry = {
        "name": "sl2r",
        "title": "SL(2,R)",
        "matrix_size": 2,
        "symplectic_form": mat_out(J),
        "matrix_sigma": "conjugate",
        "matrix_theta": "negative_transpose",
        "basis": [{"name": n, "matrix": mat_out(m)} for n, m in (("Htheta", Ht), ("Etheta", Et), ("Ftheta", Ft))],
        "rank": 1,
        "sigma": mat_out(S),
        "theta": mat_out(T),
        "roots": [
            {"weight": [2], "coroot": ["1"], "grade": "noncompact"},
            {"weight": [-2], "coroot": ["-1"], "grade": "noncompact"},
        ],
        "wk_extra": [],
        "q_representatives": [mat_out(sp.diag(1, -1))],
        "center": {"orders": [2], "tau": [[1]]},
        "h1_kernel": "all",
        "real_unipotents": [mat_out(sp.Matrix([[0, 1], [0, 0]])), mat_out(sp.Matrix([[0, 0], [1, 0]]))],
        "k_unipotents": [],
        "named_elements": {k: mat_out(v) for k, v in named.items()},
        "dual_bases": [["ER", "FR", "HR"], ["Etheta", "Ftheta", "Htheta"]],
        "packet_base": [1],
        "real_representative": {"element": "FR", "scale": "1/4"},
        "scaling_cocharacter": [1, -1],
        "labels": {
            "real_orbit": {"+": {"name": "G(R)·ER*"}, "-": {"name": "G(R)·-ER*"}},
            "k_orbit": {"+": {"name": "K·Fθ*"}, "-": {"name": "K·Eθ*"}},
            "whittaker": {"+": {"name": "w[ER*]"}, "-": {"name": "w[-ER*]"}},
        },
        "golden": sl2_golden(),
    }
    return entry


def sl2_golden():
    # Each identity names the appendix statement it replays; values are exact strings.
    return [
        {"id": "bracket ER FR = HR", "kind": "bracket", "args": ["ER", "FR"], "expect": {"HR": "1"}},
        {"id": "bracket HR ER = 2ER", "kind": "bracket", "args": ["HR", "ER"], "expect": {"ER": "2"}},
        {"id": "bracket HR FR = -2FR", "kind": "bracket", "args": ["HR", "FR"], "expect": {"FR": "-2"}},
        {"id": "bracket Etheta Ftheta = Htheta", "kind": "bracket", "args": ["Etheta", "Ftheta"], "expect": {"Htheta": "1"}},
        {"id": "bracket Htheta Etheta = 2Etheta", "kind": "bracket", "args": ["Htheta", "Etheta"], "expect": {"Etheta": "2"}},
        {"id": "bracket Htheta Ftheta = -2Ftheta", "kind": "bracket", "args": ["Htheta", "Ftheta"], "expect": {"Ftheta": "-2"}},
        {"id": "sigma ER = -ER", "kind": "sigma", "args": ["ER"], "expect": {"ER": "-1"}},
        {"id": "sigma FR = -FR", "kind": "sigma", "args": ["FR"], "expect": {"FR": "-1"}},
        {"id": "theta ER = FR", "kind": "theta", "args": ["ER"], "expect": {"FR": "1"}},
        {"id": "theta HR = -HR", "kind": "theta", "args": ["HR"], "expect": {"HR": "-1"}},
        {"id": "theta Etheta = -Etheta", "kind": "theta", "args": ["Etheta"], "expect": {"Etheta": "-1"}},
        {"id": "theta Ftheta = -Ftheta", "kind": "theta", "args": ["Ftheta"], "expect": {"Ftheta": "-1"}},
        {"id": "sigma Etheta = Ftheta", "kind": "sigma", "args": ["Etheta"], "expect": {"Ftheta": "1"}},
        {"id": "sigma Htheta = -Htheta", "kind": "sigma", "args": ["Htheta"], "expect": {"Htheta": "-1"}},
        {"id": "Etheta = (ER-FR+HR)/2", "kind": "combination", "args": ["Etheta"], "expect": {"ER": "1/2", "FR": "-1/2", "HR": "1/2"}},
        {"id": "Ftheta = (-ER+FR+HR)/2", "kind": "combination", "args": ["Ftheta"], "expect": {"ER": "-1/2", "FR": "1/2", "HR": "1/2"}},
        {"id": "Htheta = -ER-FR", "kind": "combination", "args": ["Htheta"], "expect": {"ER": "-1", "FR": "-1"}},
        {"id": "ER = (Etheta-Ftheta-Htheta)/2", "kind": "combination", "args": ["ER"], "expect": {"Etheta": "1/2", "Ftheta": "-1/2", "Htheta": "-1/2"}},
        {"id": "FR = (-Etheta+Ftheta-Htheta)/2", "kind": "combination", "args": ["FR"], "expect": {"Etheta": "-1/2", "Ftheta": "1/2", "Htheta": "-1/2"}},
        {"id": "HR = Etheta+Ftheta", "kind": "combination", "args": ["HR"], "expect": {"Etheta": "1", "Ftheta": "1"}},
        {"id": "kappa_c(t_z,t_w) = -2czw", "kind": "trace_form_torus", "args": ["t1"], "expect": {"coefficient": "-2"}},
        {"id": "tr(ad t_z ad t_w) = -8zw", "kind": "killing_torus", "args": ["t1"], "expect": {"coefficient": "-8"}},
        {"id": "Killing = kappa_4", "kind": "killing_is_trace_form", "args": [], "expect": {"c": "4"}},
        {"id": "psi_c(HR) = 2c HR*", "kind": "psi_c", "args": ["HR"], "dual_basis": ["ER", "FR", "HR"], "expect": {"HR": "2"}},
        {"id": "psi_c(ER) = c FR*", "kind": "psi_c", "args": ["ER"], "dual_basis": ["ER", "FR", "HR"], "expect": {"FR": "1"}},
        {"id": "psi_c(FR) = c ER*", "kind": "psi_c", "args": ["FR"], "dual_basis": ["ER", "FR", "HR"], "expect": {"ER": "1"}},
        {"id": "psi_c(Htheta) = 2c Htheta*", "kind": "psi_c", "args": ["Htheta"], "dual_basis": ["Etheta", "Ftheta", "Htheta"], "expect": {"Htheta": "2"}},
        {"id": "psi_c(Etheta) = c Ftheta*", "kind": "psi_c", "args": ["Etheta"], "dual_basis": ["Etheta", "Ftheta", "Htheta"], "expect": {"Ftheta": "1"}},
        {"id": "psi_c(Ftheta) = c Etheta*", "kind": "psi_c", "args": ["Ftheta"], "dual_basis": ["Etheta", "Ftheta", "Htheta"], "expect": {"Etheta": "1"}},
        {"id": "t_i = -Htheta", "kind": "torus_point", "args": ["t1"], "z": "i", "expect": {"Htheta": "-1"}},
        {"id": "lambda_z = -iz Htheta*", "kind": "lambda_z", "args": ["t1"], "expect": {"Htheta": "-i"}},
        {"id": "lambda_ik = k Htheta*", "kind": "lambda_ik", "args": ["t1"], "expect": {"Htheta": "1"}},
        {"id": "coroot = t_{-i}", "kind": "coroot", "args": ["t1"], "z": "-i", "expect": {}},
        {"id": "<lambda_ik, coroot> = k", "kind": "pairing_k", "args": ["t1"], "expect": {}},
        {"id": "rho = lambda_i", "kind": "rho", "args": ["t1"], "expect": {"k": "1"}},
        {"id": "AC(G(R) k Htheta) = -sgn(k) G(R) ER", "kind": "ac_matrix", "args": ["Htheta", "ER"], "expect": {}},
        {"id": "AC(G(R) lambda_ik) = G(R)(-sgn(k) ER*)", "kind": "ac_covector", "args": ["ER"], "expect": {}},
        {"id": "F_pi = Ftheta (k>0), Etheta (k<0)", "kind": "f_pi", "args": [], "expect": {"positive": "Ftheta", "negative": "Etheta"}},
        {"id": "psi(Ftheta) = 4 Etheta*", "kind": "psi_killing", "args": ["Ftheta"], "expect": {"Etheta": "4"}},
        {"id": "psi(Etheta) = 4 Ftheta*", "kind": "psi_killing", "args": ["Etheta"], "expect": {"Ftheta": "4"}},
        {"id": "AV = K Etheta* (k>0), K Ftheta* (k<0)", "kind": "av", "args": [], "expect": {"positive": "K·Eθ*", "negative": "K·Fθ*"}},
        {"id": "KS(K Etheta*) = G(R)(-ER*)", "kind": "ks_chain", "args": [], "expect": {"positive": "G(R)·-ER*", "negative": "G(R)·ER*"}},
        {"id": "WF = G(R)(-sgn(k) ER*)", "kind": "wf", "args": [], "expect": {"positive": "G(R)·-ER*", "negative": "G(R)·ER*"}},
        {"id": "ER*, FR* are G(R)-conjugate", "kind": "er_fr_conjugate", "args": ["ER", "FR"], "expect": {}},
        {"id": "K(-ER*) contains 2 Htheta*", "kind": "kostant_contains", "args": [], "X": {"ER": "-1"}, "point": {"Htheta": "2"}, "expect": {}},
        {"id": "K(-ER*) meets G(R) 2Htheta*", "kind": "kostant_meets", "args": [], "X": {"ER": "-1"}, "k": 2, "expect": {"meets": "true"}},
        {"id": "K(ER*) meets G(R) (-2Htheta*)", "kind": "kostant_meets", "args": [], "X": {"ER": "1"}, "k": -2, "expect": {"meets": "true"}},
        {"id": "Wh = w[-sgn(k) ER*]", "kind": "whittaker", "args": [], "expect": {"positive": "w[-ER*]", "negative": "w[ER*]"}},
    ]


def sp4():
    h = sp.Rational(1, 2)
    Z = sp.zeros(4, 4)

    def t(a, b):
        m = sp.zeros(4, 4)
        m[0, 2] = a
        m[2, 0] = -a
        m[1, 3] = b
        m[3, 1] = -b
        return m

    h1 = t(-I, 0)
    h2 = t(0, -I)
    X = {
        (2, 0): sp.Matrix([[-I * h, 0, h, 0], [0, 0, 0, 0], [h, 0, I * h, 0], [0, 0, 0, 0]]),
        (0, 2): sp.Matrix([[0, 0, 0, 0], [0, -I * h, 0, h], [0, 0, 0, 0], [0, h, 0, I * h]]),
        (1, 1): sp.Matrix([[0, -I * h, 0, h], [-I * h, 0, h, 0], [0, h, 0, I * h], [h, 0, I * h, 0]]),
        (1, -1): sp.Matrix([[0, h, 0, -I * h], [-h, 0, -I * h, 0], [0, I * h, 0, h], [I * h, 0, -h, 0]]),
        (-2, 0): sp.Matrix([[I * h, 0, h, 0], [0, 0, 0, 0], [h, 0, -I * h, 0], [0, 0, 0, 0]]),
        (0, -2): sp.Matrix([[0, 0, 0, 0], [0, I * h, 0, h], [0, 0, 0, 0], [0, h, 0, -I * h]]),
        (-1, -1): sp.Matrix([[0, I * h, 0, h], [I * h, 0, h, 0], [0, h, 0, -I * h], [h, 0, -I * h, 0]]),
        (-1, 1): sp.Matrix([[0, -h, 0, -I * h], [h, 0, -I * h, 0], [0, I * h, 0, -h], [I * h, 0, h, 0]]),
    }
    J = sp.Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
    order = [(2, 0), (0, 2), (1, 1), (1, -1), (-2, 0), (0, -2), (-1, -1), (-1, 1)]

    def coroot(a):
        # coroot of a in the (h1, h2) basis; pairing is the dot product
        n = a[0] * a[0] + a[1] * a[1]
        return (sp.Rational(2 * a[0], n), sp.Rational(2 * a[1], n))

    grades = {}
    for a in order:
        m = X[a]
        assert sp.expand(m.T * J + J * m) == Z
        assert br(h1, m) == a[0] * m and br(h2, m) == a[1] * m
        neg = (-a[0], -a[1])
        cr = coroot(a)
        assert br(m, X[neg]) == cr[0] * h1 + cr[1] * h2, a
        th = theta_rule(m)
        if th == m:
            grades[a] = "compact"
            assert sigma_rule(m) == -X[neg]
        else:
            assert th == -m
            grades[a] = "noncompact"
            assert sigma_rule(m) == X[neg]
    basis = [h1, h2] + [X[a] for a in order]
    check_realization(basis, sigma_rule, theta_rule)
    S = involution_matrix(basis, sigma_rule, True)
    T = involution_matrix(basis, theta_rule, False)

    def E(i, j):
        m = sp.zeros(2, 2)
        m[i, j] = 1
        return m

    def blk(A=None, B=None, C=None):
        A = A if A is not None else sp.zeros(2, 2)
        B = B if B is not None else sp.zeros(2, 2)
        C = C if C is not None else sp.zeros(2, 2)
        return sp.Matrix(sp.BlockMatrix([[A, B], [C, -A.T]]))

    real_unip = [blk(A=E(0, 1)), blk(A=E(1, 0)), blk(B=E(0, 0)), blk(B=E(1, 1)), blk(B=E(0, 1) + E(1, 0)),
                 blk(C=E(0, 0)), blk(C=E(1, 1)), blk(C=E(0, 1) + E(1, 0))]
    for m in real_unip:
        assert sp.expand(m.T * J + J * m) == Z and (m ** 4) == Z
    k_unip = [X[(1, -1)], X[(-1, 1)]]
    q = sp.diag(1, 1, -1, -1)
    assert q * J * q == -J
    # real principal nilpotents in i g(R); class representatives are fixed by their label
    Nplus = blk(A=E(0, 1), B=E(1, 1))
    named = {"h1": h1, "h2": h2, "Nreal": I * Nplus}
    for a in order:
        named[f"X[{a[0]},{a[1]}]"] = X[a]
    entry = {
        "name": "sp4r",
        "title": "Sp(4,R)",
        "matrix_size": 4,
        "symplectic_form": mat_out(J),
        "matrix_sigma": "conjugate",
        "matrix_theta": "negative_transpose",
        "basis": [{"name": "h1", "matrix": mat_out(h1)}, {"name": "h2", "matrix": mat_out(h2)}]
        + [{"name": f"X[{a[0]},{a[1]}]", "matrix": mat_out(X[a])} for a in order],
        "rank": 2,
        "sigma": mat_out(S),
        "theta": mat_out(T),
        "roots": [{"weight": list(a), "coroot": [str(c) for c in coroot(a)], "grade": grades[a]} for a in order],
        "wk_extra": [],
        "q_representatives": [mat_out(q)],
        "center": {"orders": [2], "tau": [[1]]},
        "h1_kernel": "all",
        "real_unipotents": [mat_out(m) for m in real_unip],
        "k_unipotents": [mat_out(m) for m in k_unip],
        "named_elements": {k: mat_out(v) for k, v in named.items()},
        "packet_base": [2, 1],
        "real_representative": {"element": "Nreal", "scale": "1"},
        "labels": {
            "real_orbit": {"+": {"name": "G(R)·Ω+"}, "-": {"name": "G(R)·Ω-"}},
            "k_orbit": {"+": {"name": "K·Θ+"}, "-": {"name": "K·Θ-"}},
            "whittaker": {"+": {"name": "w[Ω+]"}, "-": {"name": "w[Ω-]"}},
        },
        "golden": [],
    }
    return entry


def main():
    out = {"format": 1, "entries": [sl2(), sp4()]}
    path = Path(__file__).with_name("catalog.json")
    path.write_text(json.dumps(out, indent=1, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
