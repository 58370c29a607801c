//! Single-box crystals of type B, oscillating tableaux and energy.

pub mod charge;
pub mod energy;
pub mod letter;
pub mod ssot;
pub mod strip;
pub mod tensor;

pub use charge::{charge, kostka_foulkes, semistandard_tableaux, standard_tableaux, Tableau};
pub use energy::{energy, local_h, x_polynomial_boxcase, EnergyRule, FactorOrder, LocalH};
pub use letter::Letter;
pub use ssot::{epsilon_c, ssot_enumerate, ssot_to_tensor, Ssot};
pub use strip::{strip_to_column, validate_strip, Column, OscHStrip};
pub use tensor::{crystal_e, crystal_f, enumerate_highest, is_classical_highest, BoxTensor};
