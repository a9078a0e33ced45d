//! Consistent sampling with and without replacement.
//!
//! Each item receives a pseudorandom ticket number in (0, 1), derived from
//! SHA-256 and the seed, and items are drawn in increasing ticket order.
//! When sampling with replacement a drawn item gets a new ticket, uniformly
//! larger than its previous one, and returns to the pool. Samples are
//! consistent: a larger sample extends a smaller one, and restricting the
//! population restricts the draw sequence to the surviving items.
//!
//! ```
//! use consample::{sample, Population};
//!
//! let population = Population::new(["A", "B", "C", "D", "E"]).unwrap();
//! let draws = sample(&population, "sample-seed", 3, false).unwrap();
//! let ids: Vec<_> = draws.iter().map(|r| r.id.as_str()).collect();
//! assert_eq!(ids, ["C", "D", "E"]);
//! ```

pub mod analysis;
pub mod error;
pub mod oracle;
pub mod output;
pub mod prng;
pub mod sampler;
pub mod ticket;

pub use error::{Error, Field, Result};
pub use output::Format;
pub use sampler::{sample, Population, SampleRecord, Sampler, Ticket};
pub use ticket::{first_ticket_number, next_ticket_number, TicketNumber};
