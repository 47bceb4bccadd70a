//! Reference energies of the hydrogen-like table, `δσ² = 1`, `q = 0`.

/// One level: our closed form to six decimals, and the independent
/// literature value to five where one exists.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenLevel {
    pub n_bar: usize,
    pub energy_ev: f64,
    pub literature_ev: Option<f64>,
}

pub const TABLE1: [GoldenLevel; 6] = [
    GoldenLevel { n_bar: 1, energy_ev: -13.605820, literature_ev: Some(-13.60582) },
    GoldenLevel { n_bar: 2, energy_ev: -3.401455, literature_ev: Some(-3.40145) },
    GoldenLevel { n_bar: 3, energy_ev: -1.511757, literature_ev: Some(-1.51176) },
    GoldenLevel { n_bar: 4, energy_ev: -0.850363, literature_ev: Some(-0.85036) },
    GoldenLevel { n_bar: 5, energy_ev: -0.544232, literature_ev: Some(-0.54423) },
    GoldenLevel { n_bar: 6, energy_ev: -0.377939, literature_ev: None },
];

/// Allowed difference from [`TABLE1`] in eV.
pub const TABLE1_TOL_EV: f64 = 1e-6;

pub fn level(n_bar: usize) -> Option<&'static GoldenLevel> {
    TABLE1.iter().find(|g| g.n_bar == n_bar)
}
