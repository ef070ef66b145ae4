"""Exact reference values, computed with sympy straight from the definition files.

Nothing from ``aqg`` is imported. The solves use the plain Hopf-algebra
forms (m(S (x) id)Delta = eps 1 and so on) rather than the package's
multiplier forms, so agreement is a genuine cross-check.

    python3 tests/oracle/derive.py > tests/oracle/values.json
"""

import json
import sys
from pathlib import Path

import sympy as sp

DATA = Path(__file__).resolve().parents[2] / "src" / "aqg" / "data"
NAMES = ["group_z2", "group_z4", "group_s3", "function_z2", "function_s3", "kac_paljutkin", "sweedler"]


def exact(z):
    re, im = z
    return sp.nsimplify(re, [sp.sqrt(2)], tolerance=1e-13) + sp.I * sp.nsimplify(im, [sp.sqrt(2)], tolerance=1e-13)


def read(name):
    doc = json.loads((DATA / f"{name}.aqg.json").read_text(encoding="utf-8"))
    n = doc["dimension"]
    m = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i, j, terms in doc["mult"]:
        for k, z in terms:
            m[i][j][k] = exact(z)
    star = [[0] * n for _ in range(n)]
    for i, terms in doc["star"]:
        for j, z in terms:
            star[i][j] = exact(z)
    D = [[[0] * n for _ in range(n)] for _ in range(n)]
    for k, terms in doc["comult"]:
        for p, q, z in terms:
            D[p][q][k] = exact(z)
    unit = [exact(z) for z in doc["unit"]]
    return n, m, star, D, unit, doc["basis"]


def solve_linear(eqs, unknowns):
    sol = sp.linsolve([sp.expand(e) for e in eqs], unknowns)
    (vals,) = list(sol)
    return list(vals)


def derive(name):
    n, m, star, D, unit, labels = read(name)
    R = range(n)
    out = {"labels": labels, "dimension": n}

    # counit: (eps (x) id)Delta = id
    e = sp.symbols(f"e0:{n}")
    eqs = [sum(e[p] * D[p][q][k] for p in R) - (1 if q == k else 0) for k in R for q in R]
    eps = solve_linear(eqs, e)
    out["counit"] = eps

    # antipode: sum_{p,q} D[p][q][k] S(e_p) e_q = eps(e_k) 1, and the mirrored identity
    s = sp.symbols(f"s0:{n*n}")
    S = [[s[i * n + j] for j in R] for i in R]  # S(e_j) = sum_i S[i][j] e_i
    eqs = []
    for k in R:
        for r in R:
            left = sum(D[p][q][k] * S[i][p] * m[i][q][r] for p in R for q in R for i in R)
            right = sum(D[p][q][k] * S[i][q] * m[p][i][r] for p in R for q in R for i in R)
            eqs.append(left - eps[k] * unit[r])
            eqs.append(right - eps[k] * unit[r])
    Sv = solve_linear(eqs, s)
    S = [[Sv[i * n + j] for j in R] for i in R]
    out["antipode"] = S

    # left Haar: (id (x) phi)Delta(e_k) = phi(e_k) 1
    f = sp.symbols(f"f0:{n}")
    eqs = [sum(D[p][q][k] * f[q] for q in R) - f[k] * unit[p] for k in R for p in R]
    sol = sp.Matrix([[sp.Poly(sp.expand(eq), *f).coeff_monomial(x) for x in f] for eq in eqs])
    null = sol.nullspace()
    assert len(null) == 1, name
    v = list(null[0])
    scale = sum(v[i] * unit[i] for i in R)
    if scale == 0:
        scale = next(x for x in v if x != 0)
    phi = [sp.nsimplify(x / scale) for x in v]
    out["haar"] = phi

    def prod(x, y):
        return [sum(x[i] * y[j] * m[i][j][k] for i in R for j in R) for k in R]

    def basis(i):
        return [1 if j == i else 0 for j in R]

    # Gram matrix phi(e_i* e_j)
    G = sp.Matrix(n, n, lambda i, j: sum(phi[k] * prod(star[i], basis(j))[k] for k in R))
    eig = [complex(sp.N(x, 30)) for x in G.eigenvals(multiple=True)]
    out["gram_eigenvalues"] = [[z.real, z.imag] for z in sorted(eig, key=lambda z: (round(z.real, 9), round(z.imag, 9)))]

    # modular element: (phi (x) id)Delta(e_k) = phi(e_k) delta
    d = sp.symbols(f"d0:{n}")
    eqs = [sum(phi[p] * D[p][q][k] for p in R) - phi[k] * d[q] for k in R for q in R]
    delta = solve_linear(eqs, d)
    out["delta"] = delta

    # rho: phi(e_i e_j) = phi(e_j rho(e_i))
    r = sp.symbols(f"r0:{n*n}")
    rho = [[r[a * n + b] for b in R] for a in R]
    eqs = []
    for i in R:
        rho_i = [rho[a][i] for a in R]
        for j in R:
            lhs = sum(phi[k] * prod(basis(i), basis(j))[k] for k in R)
            rhs = sum(phi[k] * prod(basis(j), rho_i)[k] for k in R)
            eqs.append(lhs - rhs)
    rv = solve_linear(eqs, r)
    out["rho"] = [[rv[a * n + b] for b in R] for a in R]

    # mu from rho(delta) = mu^-1 delta
    rd = [sum(out["rho"][a][b] * delta[b] for b in R) for a in R]
    idx = next(a for a in R if delta[a] != 0)
    out["mu"] = sp.nsimplify(delta[idx] / rd[idx])
    return out


def encode(x):
    if isinstance(x, (list, tuple)):
        return [encode(y) for y in x]
    if isinstance(x, (str, int, float)) and not isinstance(x, bool):
        return x
    z = complex(sp.N(x, 30))
    return [z.real, z.imag]


def main():
    for name in NAMES:
        values = {key: encode(v) for key, v in derive(name).items()}
        sys.stdout.write(("{\n" if name == NAMES[0] else ",\n") + f" {json.dumps(name)}: {json.dumps(values)}")
    sys.stdout.write("\n}\n")


if __name__ == "__main__":
    main()
