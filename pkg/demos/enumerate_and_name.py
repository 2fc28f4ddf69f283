"""Walk through the signature census: the 17 flat groups, then nearby
spherical and hyperbolic families.

Run:  python3 demos/enumerate_and_name.py
"""

from fractions import Fraction

from orbifold import euler
from orbifold.notation import parse, to_string


def main() -> None:
    print("The 17 flat signatures, with their cost receipts and names")
    print("-" * 60)
    for text in sorted(to_string(s) for s in euler.enumerate_euclidean()):
        sig = parse(text)
        name = euler.conway_name(sig)
        print(f"  {text:>6}   cost = {euler.cost(sig)}   name = {name}")
    print()

    print("Spherical signatures with every order <= 5 (38 of them)")
    print("-" * 60)
    spherical = sorted(to_string(s) for s in euler.enumerate_spherical(5))
    for row in range(0, len(spherical), 6):
        print("  " + "  ".join(f"{t:>7}" for t in spherical[row : row + 6]))
    print()

    print("A slice of the hyperbolic zoo: -1/3 <= chi <= -1/6, orders <= 3")
    print("-" * 60)
    window = euler.enumerate_by_chi(Fraction(-1, 3), Fraction(-1, 6), 3)
    for text in sorted(to_string(s) for s in window):
        sig = parse(text)
        print(f"  {text:>8}   chi = {euler.euler_characteristic(sig)}")
    print()

    print("Spot checks")
    print("-" * 60)
    for text in ("*532", "*237", "532", "2*22"):
        sig = parse(text)
        info = euler.classify(sig)
        order = f"  symmetry order {info.order}" if info.order else ""
        print(f"  {text:>6}: chi = {euler.euler_characteristic(sig)}, "
              f"{info.kind}{order}")


if __name__ == "__main__":
    main()
