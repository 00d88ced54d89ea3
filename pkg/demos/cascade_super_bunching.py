"""Diffusers in series: g2 doubles at every stage.

Each pass through a many-cell diffuser multiplies g2 by ~2 (exactly
2M/(M+1)), so k stages turn laser light into light with g2 close to 2^k —
far beyond the thermal value.  The price is intensity: each stage also
divides the mean by M.
"""

from rggstats import (
    cascade_pmf,
    coherent_limit_pmf,
    correlation_report,
    gn_limit,
    pmf_mean,
    poisson_pmf,
    scatter_pmf,
    total_variation,
)

M = 10_000


def main() -> None:
    print(f"coherent input, mean 1, repeatedly scattered over M = {M} cells\n")
    print(f"{'stages':>7} {'mean':>12} {'g2':>10} {'2^k':>7} {'rel gap':>9}")
    pmf = poisson_pmf(1.0)
    for k in range(1, 5):
        pmf = scatter_pmf(pmf, M)
        rep = correlation_report(pmf, 2)
        target = 2.0**k
        print(
            f"{k:>7} {pmf_mean(pmf):>12.3e} {rep.g2:>10.5f} {target:>7.0f}"
            f" {abs(rep.g2 - target) / target:>9.1e}"
        )

    print("\nsame thing via the limit helpers:")
    print(f"  gn_limit(1.0, 2, stages=4) = {gn_limit(1.0, 2, 4):.1f}")

    one = cascade_pmf(poisson_pmf(1.0), M, 1)
    print(
        "\nand the single-stage output is already thermal to "
        f"TV = {total_variation(one, coherent_limit_pmf(1.0, M)):.2e}"
    )


if __name__ == "__main__":
    main()
