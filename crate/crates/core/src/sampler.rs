//! The priority-queue sampler.
//!
//! Every item holds exactly one ticket in a min-heap. A draw pops the least
//! ticket; with replacement the drawn item is pushed back with its next,
//! strictly larger ticket number. Output depends only on the set of ids and
//! the seed.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ticket::{
    first_ticket_number, next_ticket_number, validate_id, validate_seed, TicketNumber,
};

/// A nonempty set of unique, nonempty, NUL-free item ids, kept in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Population {
    ids: Vec<Arc<str>>,
}

impl Population {
    pub fn new<I, S>(ids: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (index, id) in ids.into_iter().enumerate() {
            let id = id.as_ref();
            validate_id(id).map_err(|e| Error::InvalidItem {
                index,
                source: Box::new(e),
            })?;
            if !seen.insert(id.to_owned()) {
                return Err(Error::DuplicateId {
                    id: id.to_owned(),
                    index,
                });
            }
            out.push(Arc::from(id));
        }
        if out.is_empty() {
            return Err(Error::EmptyPopulation);
        }
        Ok(Population { ids: out })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    /// Always false; a population cannot be empty.
    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> + '_ {
        self.ids.iter().map(|s| &**s)
    }

    pub fn contains(&self, id: &str) -> bool {
        self.ids.iter().any(|s| &**s == id)
    }
}

/// `(number, id, generation)`, ordered lexicographically in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ticket {
    pub number: TicketNumber,
    pub id: Arc<str>,
    pub generation: u64,
}

impl Ord for Ticket {
    fn cmp(&self, other: &Self) -> Ordering {
        self.number
            .cmp(&other.number)
            .then_with(|| self.id.cmp(&other.id))
            .then_with(|| self.generation.cmp(&other.generation))
    }
}

impl PartialOrd for Ticket {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// One draw: its 1-based position in the sample, the item, how many times
/// the item has now been drawn, and the ticket that selected it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleRecord {
    pub position: u64,
    pub id: String,
    pub generation: u64,
    pub number: TicketNumber,
}

#[derive(Debug, Clone)]
pub struct Sampler {
    queue: BinaryHeap<Reverse<Ticket>>,
    population_size: usize,
    with_replacement: bool,
    draws_made: u64,
}

impl Sampler {
    pub fn new(population: &Population, seed: &str, with_replacement: bool) -> Result<Self> {
        validate_seed(seed)?;
        let mut tickets = Vec::with_capacity(population.len());
        for id in &population.ids {
            tickets.push(Reverse(Ticket {
                number: first_ticket_number(id, seed)?,
                id: Arc::clone(id),
                generation: 1,
            }));
        }
        Ok(Sampler {
            queue: BinaryHeap::from(tickets),
            population_size: population.len(),
            with_replacement,
            draws_made: 0,
        })
    }

    pub fn with_replacement(&self) -> bool {
        self.with_replacement
    }

    pub fn draws_made(&self) -> u64 {
        self.draws_made
    }

    pub fn queue_len(&self) -> usize {
        self.queue.len()
    }

    /// The ticket that the next draw will return, if any.
    pub fn peek(&self) -> Option<&Ticket> {
        self.queue.peek().map(|r| &r.0)
    }

    /// Draws the next item, or `None` once a without-replacement sampler has
    /// returned every item.
    pub fn draw(&mut self) -> Option<SampleRecord> {
        let Reverse(ticket) = self.queue.pop()?;
        self.draws_made += 1;
        let record = SampleRecord {
            position: self.draws_made,
            id: ticket.id.to_string(),
            generation: ticket.generation,
            number: ticket.number.clone(),
        };
        if self.with_replacement {
            self.queue.push(Reverse(Ticket {
                number: next_ticket_number(&ticket.number),
                id: ticket.id,
                generation: ticket.generation + 1,
            }));
        }
        debug_assert_eq!(
            self.queue.len(),
            if self.with_replacement {
                self.population_size
            } else {
                self.population_size - self.draws_made as usize
            }
        );
        Some(record)
    }
}

impl Iterator for Sampler {
    type Item = SampleRecord;

    fn next(&mut self) -> Option<SampleRecord> {
        self.draw()
    }
}

/// The first `size` draws for `(population, seed)`.
pub fn sample(
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
    let sampler = Sampler::new(population, seed, with_replacement)?;
    Ok(sampler.take(size).collect())
}
