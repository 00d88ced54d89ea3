"""What one speckle cell sees.

Sends three standard inputs with the same mean photon number through a
single diffuser and prints the photon-number distribution on one cell.
The striking part: whether the input is a Fock state, a laser, or already
thermal, a handful of cells is enough to push the single-cell statistics
onto (or past) the Bose-Einstein curve.
"""

from rggstats import (
    Coherent,
    Fock,
    Thermal,
    correlation_report,
    input_pmf,
    scatter_pmf,
    thermal_pmf,
)

NBAR = 8
M = 8


def main() -> None:
    reference = thermal_pmf(NBAR / M)
    rows = {"thermal reference": reference}
    for spec in (Fock(NBAR), Coherent(float(NBAR)), Thermal(float(NBAR))):
        rows[type(spec).__name__.lower()] = scatter_pmf(input_pmf(spec), M)

    print(f"single-cell pmf, mean {NBAR} photons into M = {M} cells\n")
    header = f"{'n':>3}" + "".join(f"{name:>20}" for name in rows)
    print(header)
    for n in range(9):
        cells = "".join(
            f"{(p.probs[n] if n < len(p) else 0.0):>20.6f}" for p in rows.values()
        )
        print(f"{n:>3}{cells}")

    print("\nsecond-order correlation g2 of each output:")
    for name, pmf in rows.items():
        print(f"  {name:<20} {correlation_report(pmf, 2).g2:.6f}")
    print("  (pure thermal light would give exactly 2)")


if __name__ == "__main__":
    main()
