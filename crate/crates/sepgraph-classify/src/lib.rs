//! Classification tools for finite bipartite separated graphs: choices and
//! Condition (L), type A/B vertices, 1-connectivity, closed-path groups,
//! cycle classes and the simplicity dichotomy.

mod choice;
mod components;
mod cycles;
mod dichotomy;
mod error;
mod types;

pub use choice::{admits_choice, choice_vertices, condition_l, simple_cycles_at, ConditionL};
pub use components::{one_components, OneComponents};
pub use cycles::{closed_path_rank, cycle_classes, simple_closed_paths, CycleClass};
pub use dichotomy::{classify_simplicity, SimplicityVerdict, DEFAULT_BOUND};
pub use error::ClassifyError;
pub use types::{vertex_types, VertexType, VertexTypeMap};
