"""Check a handful of catalogued laws and hunt for counterexamples."""

import argparse

from multirel.laws import catalog, check_valid, get_law, hunt


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("names", nargs="*",
                    default=["c1", "cl4", "dom-locality", "par-split",
                             "seq-superassoc", "interchange-1a"])
    args = ap.parse_args()
    for name in args.names:
        law = get_law(name)
        v = check_valid(law, args.n) if law.expected == "Valid" else hunt(law)
        print(f"{law.statement():70s} expected {law.expected:8s} -> {v.status}")
        if v.witness:
            for var, pairs in v.witness.items():
                print(f"    {var} = {pairs}")
    print(f"{len(catalog())} laws in the catalogue")


if __name__ == "__main__":
    main()
