//! Spectral vs closed-form agreement above the acceptance range: the
//! acceptance suite sweeps n = 1..=152 exhaustively, this samples the upper
//! end of the supported range for both Chebyshev kinds.

use ortho_entropy::closedform::ClosedFormEntropy;
use ortho_entropy::families::Family;

#[test]
fn cross_route_agreement_at_large_degree() {
    let cf = ClosedFormEntropy::<f64>::new();
    for family in [Family::Chebyshev1, Family::Chebyshev2] {
        for n in [200usize, 251, 300] {
            let report = cf.compare(&family, n, 1e-9).unwrap();
            assert!(
                report.pass,
                "{} n={n}: max diff {:e}",
                family.name(),
                report.max_abs_diff
            );
        }
    }
}
