use super::{energy_parabolic, BetaMode, HartmannError, ParabolicState, PotentialParams};

/// One `(m, n + n')` row of a degenerate block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Table1Row {
    pub m: usize,
    pub n_sum: usize,
    pub energy_ev: f64,
}

/// All rows sharing one principal number.
#[derive(Debug, Clone, PartialEq)]
pub struct Table1Block {
    pub n_bar: usize,
    pub energy_ev: f64,
    pub energy_internal: f64,
    pub rows: Vec<Table1Row>,
}

/// Hydrogen-like levels grouped by `n̄ = m + (n + n') + 1`, `m` descending
/// inside each block. Energies use the principal mode.
pub fn table1(params: &PotentialParams, n_bar_max: usize) -> Result<Vec<Table1Block>, HartmannError> {
    if n_bar_max == 0 {
        return Err(HartmannError::InvalidParameter("nbar-max must be at least 1".into()));
    }
    params.validate()?;
    let mut blocks = Vec::with_capacity(n_bar_max);
    for n_bar in 1..=n_bar_max {
        let mut rows = Vec::with_capacity(n_bar);
        let mut head = None;
        for m in (0..n_bar).rev() {
            let n_sum = n_bar - 1 - m;
            let state = ParabolicState::new(n_sum, 0, m as f64)?;
            let e = energy_parabolic(params, &state, BetaMode::Principal)?;
            head.get_or_insert(e);
            rows.push(Table1Row {
                m,
                n_sum,
                energy_ev: e.energy_ev,
            });
        }
        let head = head.expect("blocks are never empty");
        blocks.push(Table1Block {
            n_bar,
            energy_ev: head.energy_ev,
            energy_internal: head.energy_internal,
            rows,
        });
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn blocks_match_reference_energies() {
        let blocks = table1(&PotentialParams::hydrogen(), 6).unwrap();
        let want = [-13.605820, -3.401455, -1.511757, -0.850363, -0.544232, -0.377939];
        assert_eq!(blocks.len(), 6);
        for (b, w) in blocks.iter().zip(want) {
            assert_abs_diff_eq!(b.energy_ev, w, epsilon = 1e-6);
            assert_eq!(b.rows.len(), b.n_bar);
            assert!(b.rows.iter().all(|r| r.energy_ev == b.energy_ev));
        }
        let rows: Vec<_> = blocks[2].rows.iter().map(|r| (r.m, r.n_sum)).collect();
        assert_eq!(rows, vec![(2, 0), (1, 1), (0, 2)]);
        let rows: Vec<_> = blocks[3].rows.iter().map(|r| (r.m, r.n_sum)).collect();
        assert_eq!(rows, vec![(3, 0), (2, 1), (1, 2), (0, 3)]);
    }

    #[test]
    fn truncation_and_bounds() {
        assert_eq!(table1(&PotentialParams::hydrogen(), 2).unwrap().len(), 2);
        assert!(table1(&PotentialParams::hydrogen(), 0).is_err());
    }
}
