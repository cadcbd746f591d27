//! `gevcalc` — norm sweeps, factor bounds, spectral-multiplier checks, and
//! Gevrey-order fits on the unitary duals of SU(2) and H₁.

fn main() {
    std::process::exit(gevcalc_cli::run());
}
