pub mod ccc;
pub mod config;
pub mod error;
pub mod format;
pub mod functor;
pub mod grid;
pub mod interval;
pub mod lift;
pub mod qcat;
pub mod rational;
pub mod report;
pub mod suitable;
pub mod tnorm;
pub mod verify;
pub mod yoneda;

pub use error::{Error, Result};
pub use functor::{enumerate_functors, hom_power, hom_tensor, HomObject, QFunctor, DEFAULT_MAX_MAPS};
pub use interval::{Interval, IntervalSet};
pub use lift::{final_lift, initial_lift, Leg};
pub use qcat::{Preord, QCat, TwoPoint, Violation};
pub use rational::{q, UnitRational};
pub use suitable::{coreflect, reflect, Axiom, SuitabilityReport, SuitableSet, SuitableShape, DEFAULT_MAX_ROUNDS};
pub use tnorm::{meet_residual, Block, BlockKind, Enclosure, SubquantaleFailure, SubquantaleReport, TNorm};
pub use ccc::{ccc_criterion, ccc_identity_check, ccc_witness, power_existence_check, CCCWitness};
pub use grid::Grid;
pub use yoneda::{approx_property, yoneda_limits, ApproxCase, FCSequence, LimitSet};
pub use config::{OutputFormat, WorkspaceConfig};
pub use report::{Case, Report, Status, Summary};
pub use verify::Suite;
