"""Rebuild the Mills chain and print certified digits of the constant.

The greedy rule (always take the smallest admissible prime) with seed 2 and
cubic exponents reproduces the classical sequence 2, 11, 1361, 2521008887, ...
Each extra level multiplies the exponent by 3 and roughly triples the number
of decimal digits the nested interval pins down.
"""

from primecantor import (
    ExponentSequence,
    PrimeChain,
    bracket_for_chain,
    digits,
    extend_greedy,
    verify_representation,
)
from primecantor.constant import max_determined_digits


def main():
    es = ExponentSequence.constant(3)
    chain = PrimeChain.seed(2, es)
    print("step  element              certified digits")
    for step in range(5):
        n = max_determined_digits(chain, limit=60)
        text = digits(chain, n) if n else "(none yet)"
        print(f"{step:>4}  {chain.last:<20} {text}")
        if step < 4:
            chain = extend_greedy(chain, 1)

    print()
    report = verify_representation(chain)
    print(f"exact verification of all {len(report.levels)} levels:",
          "ok" if report.all_passed else "FAILED")
    b = bracket_for_chain(chain)
    print(f"final enclosure width ~ {float(b.width):.3e}")


if __name__ == "__main__":
    main()
