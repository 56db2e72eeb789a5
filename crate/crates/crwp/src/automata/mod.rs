//! Recognizer machinery: DFAs, nondeterministic PDAs with epsilon moves,
//! generalized sequential machines, and the closure operations used by the
//! word-problem pipeline (product intersection, inverse gsm images, unions).

mod dfa;
mod gsm;
mod ops;
mod pda;

pub use dfa::{Dfa, DfaBuilder};
pub use gsm::Gsm;
pub use ops::{gsm_inverse_image, intersect_dfa, to_final_state_mode, trim, union};
pub use pda::{AcceptMode, Configs, Pda, PdaBuilder, PdaTransition, Simulator, StackSym};
