"""Factor indexing: occurrence lists, extensions, complexities.

Run:  python demos/02_factor_complexity.py
"""

from symrich import LanguageIndex
from symrich.presets import binary_full_group, fibonacci_source, thue_morse_source

group = binary_full_group()
text = thue_morse_source().prefix(2000)
index = LanguageIndex(text, 12, group)

print("factor counts C(n):", index.complexities())
print("length-3 factors  :", index.sorted_factors(3))
print("occurrences of 011:", index.occurrences("011")[:10], "...")

# extensions and special factors
for w in index.sorted_factors(3):
    flags = []
    if index.is_left_special(w):
        flags.append("left-special")
    if index.is_right_special(w):
        flags.append("right-special")
    print(f"  {w}: Lext={sorted(index.lext(w))} Rext={sorted(index.rext(w))} {' '.join(flags)}")

# the bilateral order measures how a factor's two-sided extensions deviate
# from a product set; summed over a length level it gives the second
# difference of the complexity
c = index.complexities()
n = 3
bsum = sum(index.bilateral_order(w) for w in index.factors(n))
print(f"\nsum of bilateral orders at n={n}:", bsum,
      "= d2C(3) =", (c[n + 2] - c[n + 1]) - (c[n + 1] - c[n]))

# palindromic complexity per antimorphism, and the extension identity
for theta in group.involutive_antimorphisms:
    p = index.palindromic_complexity(theta)
    print(f"P[{theta.name}](n) =", p[:10])
    total = sum(len(index.pext(theta, w)) for w in index.theta_palindromes(theta, 4))
    print(f"  extension identity at n=4: P(6) = {p[6]} = sum of palindromic extensions = {total}")

print("\ncomplexity table CSV (first rows):")
print("\n".join(index.complexity().to_csv().split("\n")[:6]))

fib_index = LanguageIndex(fibonacci_source().prefix(2000), 52)
print("\nthe Fibonacci word has C(n) = n + 1:", fib_index.complexities()[:10], "...")
