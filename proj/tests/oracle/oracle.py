"""Independent exact oracle for the frozen values in the unit tests.

Plain fractions, no project code. Run: python3 tests/oracle/oracle.py
"""
from fractions import Fraction as Q
from itertools import permutations, product
import math


def floor(q):
    return math.floor(q)


def g(u):
    v = u - floor(u)
    if v == Q(1, 2):
        return Q(1, 2)
    return v - floor(v + Q(1, 2))


def F(u, rho, eps):
    n = len(u)
    out = []
    for i in range(n):
        acc = sum(rho[j] * g(u[j] - u[i]) for j in range(n) if j != i)
        y = 2 * (u[i] + eps * acc)
        out.append(y - floor(y))
    return out


def lift(u):
    n = u[-1]
    return [ui + floor(n - ui) - floor(n) for ui in u[:-1]] + [u[-1]]


def sort_first(u):
    return sorted(u[:-1]) + [u[-1]]


def phi(u):
    return [u[i + 1] - u[i] for i in range(len(u) - 1)], u[-1]


def phi_inv(x, s):
    u = [s]
    for xi in reversed(x):
        u.insert(0, u[0] - xi)
    return u


def G(x, rho, eps):
    u = phi_inv(x, Q(0))
    v = sort_first(lift(F(u, rho, eps)))
    return phi(v)[0]


def clustered(d, r):
    return [r] * d + [1 - d * r]


def solve(A, b):
    n = len(A)
    M = [row[:] + [bi] for row, bi in zip(A, b)]
    for c in range(n):
        p = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[p] = M[p], M[c]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c] / M[c][c]
                M[r] = [a - f * bb for a, bb in zip(M[r], M[c])]
    return [M[i][n] / M[i][i] for i in range(n)]


def fmt(v):
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(fmt(x) for x in v) + ")"
    return f"{v.numerator}/{v.denominator}"


print("F N=2 (1/4,3/4) eps=1/4:", fmt(F([Q(1, 4), Q(3, 4)], [Q(1, 2)] * 2, Q(1, 4))))
u = [Q(1, 10), Q(2, 5), Q(9, 10)]
print("F N=3 (1/10,2/5,9/10) eps=1/4:", fmt(F(u, [Q(1, 3)] * 3, Q(1, 4))))
print("pipeline x, s:", fmt(phi(sort_first(lift(u)))[0]), fmt(phi(u)[1]))
print("G2 at (3/10,1/2) eps=1/4:", fmt(G([Q(3, 10), Q(1, 2)], [Q(1, 3)] * 3, Q(1, 4))))
print("G2 at (3/10,2/5) eps=1/4:", fmt(G([Q(3, 10), Q(2, 5)], [Q(1, 3)] * 3, Q(1, 4))))
print("G3 at (1/5,1/10,3/10) eps=1/4:", fmt(G([Q(1, 5), Q(1, 10), Q(3, 10)], [Q(1, 4)] * 4, Q(1, 4))))
print("G3 at (1/10,3/5,1/10) eps=1/3 rho=27/100:", fmt(G([Q(1, 10), Q(3, 5), Q(1, 10)], clustered(3, Q(27, 100)), Q(1, 3))))
print("lift (4/5,1/10,3/10):", fmt(lift([Q(4, 5), Q(1, 10), Q(3, 10)])))

# B_0 of d=3 at eps=1/4, varrho=1/4: x = L x + b
e, r = Q(1, 4), Q(1, 4)
c = 2 * (1 - e)
L = [[0, c, 0], [-c, -c, 0], [c, c, c]]
b = [0, 1 - 2 * e * (1 - 3 * r), 2 * e * (1 - 2 * r) - 1]
A = [[(1 if i == j else 0) - L[i][j] for j in range(3)] for i in range(3)]
fp = solve(A, b)
print("B_0 fixed point d=3 eps=1/4 varrho=1/4:", fmt(fp), "sum", fmt(sum(fp)))

# feat2d at eps=49/100, rho=1/3: p0 from the B formula
e = Q(49, 100)
c = 2 * (1 - e)
L = [[-c, 0], [c, c]]
b = [1 - 2 * e / 3, 4 * e / 3 - 1]
p0 = solve([[1 - L[0][0], -L[0][1]], [-L[1][0], 1 - L[1][1]]], b)
print("feat2d p0 eps=49/100:", fmt(p0))
t = (Q(1, 2) - p0[1]) / (1 - p0[1])
p1 = [p0[0] + t * (0 - p0[0]), p0[1] + t * (1 - p0[1])]
gp1 = [L[0][0] * p1[0] + L[0][1] * p1[1] + b[0], L[1][0] * p1[0] + L[1][1] * p1[1] + b[1]]
t2 = (Q(1, 2) - p0[1]) / (gp1[1] - p0[1])
p2 = [p0[i] + t2 * (gp1[i] - p0[i]) for i in range(2)]
print("feat2d p1, p2:", fmt(p1), fmt(p2))

# Lorenz intervals
for a, xd in [(Q(11, 10), Q(3, 10)), (Q(19, 10), Q(3, 10))]:
    left = a * (xd - Q(1, 2)) + Q(1, 2)
    if a * xd < Q(1, 2):
        print("lorenz", fmt(a), fmt(xd), "two:", fmt((left, a * xd)), fmt((1 - a * xd, 1 - left)))
    else:
        print("lorenz", fmt(a), fmt(xd), "one:", fmt((left, a * (Q(1, 2) - xd) + Q(1, 2))))

# permutahedron representative by enumeration, N=3
perp = [Q(2, 5), Q(-1, 5), Q(-1, 5)]
n = 3
hits = set()
for m in product(range(-2, 3), repeat=3):
    if sum(m) != 0 or any((m[i] - m[0]) % n for i in range(n)):
        continue
    y = [perp[i] + Q(m[i], n) for i in range(n)]
    ok = True
    for k in range(1, n):
        for S in __import__("itertools").combinations(range(n), k):
            if sum(y[i] for i in S) > Q(k * (n - k), 2 * n):
                ok = False
    if ok:
        hits.add(tuple(y))
print("permutahedron rep of (2/5,-1/5,-1/5):", [fmt(list(h)) for h in hits])

# kappa on (1/10,2/5,9/10): (ku)_i = u_{i+1} + floor(u_1-u_{i+1}) - floor(u_1), (ku)_N = frac(u_1)
def kappa(u):
    n = len(u)
    out = [u[i + 1] + floor(u[0] - u[i + 1]) - floor(u[0]) for i in range(n - 1)]
    return out + [u[0] - floor(u[0])]


def order(u):
    # sorts the first N-1 coordinates, returns the sorted point
    return sort_first(u)


u = [Q(1, 10), Q(2, 5), Q(9, 10)]
pu = [u[1], u[0], u[2]]
print("kappa u:", fmt(kappa(u)), "kappa pi u:", fmt(kappa(pu)))
print("lhs, rhs:", fmt(order(kappa(pu))[-1]), fmt(order(kappa(u))[-1]))
