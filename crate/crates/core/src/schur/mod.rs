//! Highest-weight bookkeeping for `SL_n`: canonical weights, Weyl
//! dimensions, Pieri and Littlewood–Richardson products, characters.

mod character;
mod lr;
mod multiset;
pub mod oracle;
mod weight;

pub use character::{character, gl_character, peel, peel_to_sl, Character, GlWeight, PeelError};
pub use lr::{
    check_lr_gap_bound, contains, horizontal_strips, lr_coefficient, lr_decompose, lr_product_gl,
    pieri_sym, tensor, tensor_sym, tensor_sym_dual, Partition,
};
pub use multiset::WeightMultiset;
pub use weight::{Weight, WeightError};
