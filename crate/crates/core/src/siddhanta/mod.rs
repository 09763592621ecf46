//! The Āryabhaṭa tradition: the ratio 62832/20000, polygon doubling, Rsine
//! tables, Bhāskara I's sine and Bhāskara II's arc.

mod arc;
mod doubling;
mod sine;

pub use arc::{
    bhaskara2_arc, bhaskara2_arc_hp, bhaskara2_arc_oracle, bhaskara2_arc_verse,
    bhaskara2_arc_verse_hp, bhaskara2_factor,
};
pub use doubling::{
    policy_search, polygon_doubling, polygon_doubling_hp, DoublingRun, DoublingStep, HpDoubling,
    PolicySearch, RecurrenceForm, RoundingPolicy, MAX_DOUBLINGS, MAX_SEARCH_DOUBLINGS,
};
pub use sine::{bhaskara1_sine, interpolate_rsine, sine_table, SineRow, SineTable, MAX_RADIUS};

use crate::exactnum::ExactRational;

/// "Add 4 to 100, multiply by 8 and add 62000": the circumference of a
/// circle of diameter 20000, as a ratio. Reduces to `3927/1250`.
pub fn aryabhata_pi() -> ExactRational {
    ExactRational::new((100 + 4) * 8 + 62000, 20000)
}
