pub mod spectrum;
pub mod table1;
pub mod verify;
pub mod wavefunction;

use crate::CliError;

/// Largest principal number accepted on the command line.
pub const NBAR_LIMIT: usize = 64;

pub(crate) fn check_nbar_max(n: usize) -> Result<(), CliError> {
    if (1..=NBAR_LIMIT).contains(&n) {
        Ok(())
    } else {
        Err(CliError::Invalid(format!("nbar-max must be in 1..={NBAR_LIMIT} (got {n})")))
    }
}
