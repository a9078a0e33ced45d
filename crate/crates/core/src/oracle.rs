//! Naive reference sampler used to cross-check [`crate::sampler`].
//!
//! Materializes every ticket the sample could possibly use, sorts them, and
//! takes a prefix. With replacement an item can be drawn at most `size`
//! times, so `size` generations per item suffice.

use crate::error::{Error, Result};
use crate::sampler::{Population, SampleRecord};
use crate::ticket::{self, first_ticket_number, next_ticket_number, TicketNumber};

/// Largest `size` accepted with replacement; the pool grows as `n * size`.
pub const MAX_REPLACEMENT_SIZE: usize = 10_000;

pub fn oracle_sample(
    population: &Population,
    seed: &str,
    size: usize,
    with_replacement: bool,
) -> Result<Vec<SampleRecord>> {
    if !with_replacement && size > population.len() {
        return Err(Error::SampleTooLarge {
            requested: size,
            population: population.len(),
        });
    }
    if with_replacement && size > MAX_REPLACEMENT_SIZE {
        return Err(Error::InvalidParameter(format!(
            "oracle sample size {size} exceeds {MAX_REPLACEMENT_SIZE}"
        )));
    }

    let generations = if with_replacement { size.max(1) } else { 1 };
    let mut pool: Vec<(TicketNumber, String, u64)> = Vec::new();
    for id in population.ids() {
        let mut number = first_ticket_number(id, seed)?;
        for generation in 1..=generations as u64 {
            if generation > 1 {
                number = next_ticket_number(&number);
            }
            pool.push((number.clone(), id.to_owned(), generation));
        }
    }

    pool.sort_by(|a, b| {
        ticket::compare(&a.0, &b.0)
            .then_with(|| a.1.cmp(&b.1))
            .then_with(|| a.2.cmp(&b.2))
    });

    Ok(pool
        .into_iter()
        .take(size)
        .enumerate()
        .map(|(i, (number, id, generation))| SampleRecord {
            position: i as u64 + 1,
            id,
            generation,
            number,
        })
        .collect())
}
