//! Hom-associative structure of an algebra: its twist space, hom-unity subspaces, the AC
//! constructions, and consistency reports tying them together.

mod ac;
mod audit;
mod bijection;
mod tables;
mod twist;
mod unities;

pub use ac::{ac_left, ac_one_sided, ac_right, ac_two_sided, OneSidedAc};
pub use audit::{structure_theorem_audit, CommonSection, HomStructureReport, SideSection};
pub use bijection::{bijection_report, BijectionReport};
pub use tables::{multiplicativity_report, relation_tables_check, MultiplicativityReport, TableReport};
pub use twist::{twist_space, TwistSpace};
pub use unities::{hu_n, hu_t, HuVariant};
