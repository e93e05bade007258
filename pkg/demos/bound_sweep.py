"""Evaluate every applicable bound for a few graphs and norms.

Prints one line per check with its slack (rhs - lhs for upper bounds);
negative slack would be a violation.
"""
from normconn import bounds, catalog, norms


def main():
    spaces = [norms.linf(2), norms.l1(2), norms.lp(1.5, 3)]
    named = catalog.named_graphs()
    for name in ("K_5", "K_2,2,2", "bull"):
        for space in spaces:
            print(f"-- {name} in {space.descriptor()}")
            for check in bounds.check_suite(named[name], space):
                print(f"   {check.name:30s} lhs={check.lhs:.6f} rhs={check.rhs:.6f} "
                      f"slack={check.slack:+.2e}")


if __name__ == "__main__":
    main()
