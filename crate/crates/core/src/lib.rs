//! Rainbow neighbourhood numbers of graphs.
//!
//! A vertex `v` *yields* a rainbow neighbourhood under a chromatic colouring
//! when its closed neighbourhood `N[v]` meets every colour class. This crate
//! computes the number of yielding vertices under the lexicographically
//! largest class-size colourings (`r_conv`), and the minimum and maximum over
//! all chromatic colourings (`r_min`, `r_max`), with exact search oracles
//! sized for small graphs.
//!
//! Around that core sit generators for the graph families and named graphs
//! the closed forms are stated for, graph operators (union, join, corona,
//! Chithra graphs, line graphs and expanded line graphs), and an auditor that
//! checks each closed form against the oracles.
//!
//! ```
//! use rainbow_core::{families, rainbow, OracleCaps};
//!
//! let c9 = families::cycle(9).unwrap();
//! let caps = OracleCaps::default();
//! assert_eq!(rainbow::r_conv(&c9, &caps).unwrap().value, 3);
//! assert_eq!(rainbow::r_max(&c9, &caps).unwrap().value, 9);
//! ```

pub mod colouring;
pub mod config;
mod error;
pub mod families;
pub mod graph;
pub mod par;
pub mod rainbow;
pub mod transforms;

pub use config::OracleCaps;
pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph, VertexSet};
pub use par::Execution;
