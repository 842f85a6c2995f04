"""
Determinant and Smith form tables for two infinite families
===========================================================
"""

from eisenjac import det, jacobian_of
from eisenjac.constructions import t_r, whirl, whirl_laplacian_display


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


print("T_r: det(M M^H) against 3r(r+2)^(r-2)")
for r in range(2, 9):
    M = t_r(r)
    d = det(M @ M.H)
    divisors = ", ".join(str(x) for x in jacobian_of(M).all_divisors)
    print(f"  r={r}  {M.rows}x{M.cols}  det={d}  formula={3 * r * (r + 2) ** (r - 2)}  SNF=({divisors})")

print()
print("whirls: the Laplacian is tridiagonal with a corner entry")
for r in range(2, 9):
    W = whirl(r)
    L = W @ W.H
    assert L == whirl_laplacian_display(r)
    d = det(L)
    divisors = ", ".join(str(x) for x in jacobian_of(W).all_divisors)
    print(f"  r={r}  det={d}  f(2r+2)-f(2r-2)-1={fib(2 * r + 2) - fib(2 * r - 2) - 1}  SNF=({divisors})")
