//! Ticket numbers: arbitrary-precision decimal fractions in (0, 1).
//!
//! First tickets come from the `"F"` stream keyed by seed and item id.
//! Replacement tickets come from [`next_ticket_number`], which keeps the
//! leading run of nines of `x` and appends fresh digits until the candidate
//! exceeds `x`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Field, Result};
use crate::prng::{DigitStream, Tag};

/// Digits in a first ticket, and fresh digits per replacement attempt.
pub const PRECISION: usize = 48;

const FIRST_LABEL: &str = "F";
const NEXT_LABEL: &str = "G";

/// The fraction `0.d1 d2 ... dm`.
///
/// Trailing zeros are kept as produced; equality and ordering are numeric,
/// so `0.5 == 0.50`.
#[derive(Clone)]
pub struct TicketNumber {
    digits: Vec<u8>,
}

impl TicketNumber {
    /// Builds a ticket from raw digit values (each `0..=9`); at least one
    /// must be nonzero.
    pub fn from_digits(digits: Vec<u8>) -> Result<Self> {
        if digits.iter().any(|&d| d > 9) || digits.iter().all(|&d| d == 0) {
            let text: String = digits
                .iter()
                .map(|&d| if d <= 9 { char::from(b'0' + d) } else { '?' })
                .collect();
            return Err(Error::InvalidTicket(format!("0.{text}")));
        }
        Ok(TicketNumber { digits })
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digits after the point as ASCII, e.g. `"99995241"` for `0.99995241`.
    pub fn digit_string(&self) -> String {
        self.digits.iter().map(|&d| char::from(b'0' + d)).collect()
    }

    /// Length of the initial run of nines.
    pub fn nine_run(&self) -> usize {
        self.digits.iter().take_while(|&&d| d == 9).count()
    }
}

impl fmt::Display for TicketNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0.{}", self.digit_string())
    }
}

impl fmt::Debug for TicketNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TicketNumber({self})")
    }
}

impl FromStr for TicketNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rest = s
            .strip_prefix("0.")
            .ok_or_else(|| Error::InvalidTicket(s.to_owned()))?;
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidTicket(s.to_owned()));
        }
        TicketNumber::from_digits(rest.bytes().map(|b| b - b'0').collect())
    }
}

impl Ord for TicketNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

impl PartialOrd for TicketNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for TicketNumber {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for TicketNumber {}

/// Numeric comparison; the shorter digit string is read as zero-padded.
pub fn compare(a: &TicketNumber, b: &TicketNumber) -> Ordering {
    let (a, b) = (a.digits(), b.digits());
    let common = a.len().min(b.len());
    match a[..common].cmp(&b[..common]) {
        Ordering::Equal => {}
        ord => return ord,
    }
    let a_tail_nonzero = a[common..].iter().any(|&d| d != 0);
    let b_tail_nonzero = b[common..].iter().any(|&d| d != 0);
    match (a_tail_nonzero, b_tail_nonzero) {
        (true, _) => Ordering::Greater,
        (_, true) => Ordering::Less,
        _ => Ordering::Equal,
    }
}

pub(crate) fn validate_seed(seed: &str) -> Result<()> {
    if seed.contains('\0') {
        return Err(Error::ContainsNul { field: Field::Seed });
    }
    Ok(())
}

pub(crate) fn validate_id(id: &str) -> Result<()> {
    if id.is_empty() {
        return Err(Error::EmptyField {
            field: Field::ItemId,
        });
    }
    if id.contains('\0') {
        return Err(Error::ContainsNul {
            field: Field::ItemId,
        });
    }
    Ok(())
}

/// The generation-1 ticket of `id` under `seed`: `PRECISION` digits of the
/// stream tagged `["F", seed, id]`.
///
/// In the (~1e-48) event that all of them are zero, further digits of the
/// same stream are appended until a nonzero one appears.
pub fn first_ticket_number(id: &str, seed: &str) -> Result<TicketNumber> {
    validate_id(id)?;
    validate_seed(seed)?;
    let tag = Tag::new([FIRST_LABEL, seed, id])?;
    let mut stream = DigitStream::new(tag);
    let mut digits = stream.next_digits(PRECISION);
    while digits.iter().all(|&d| d == 0) {
        digits.push(stream.next_digit());
    }
    Ok(TicketNumber { digits })
}

/// A pseudorandom ticket number in `(x, 1)`, a pure function of `x`.
pub fn next_ticket_number(x: &TicketNumber) -> TicketNumber {
    next_ticket_number_counted(x).0
}

/// Like [`next_ticket_number`], also returning how many candidates were
/// generated (always at least 1).
pub fn next_ticket_number_counted(x: &TicketNumber) -> (TicketNumber, u64) {
    let x_text = x.digit_string();
    next_ticket_number_with(x, |attempt| {
        // x's digits keep the full entropy, so the seed is not needed here
        let tag = Tag::new([NEXT_LABEL, x_text.as_str(), &attempt.to_string()])
            .expect("ASCII digits never contain NUL");
        DigitStream::new(tag).next_digits(PRECISION)
    })
}

/// The replacement procedure with a caller-supplied digit source: `fresh(a)`
/// returns the digits `v` appended on attempt `a` (starting at 1).
///
/// The loop only terminates once some candidate exceeds `x`, so `fresh`
/// must eventually return digits that do.
pub fn next_ticket_number_with<F>(x: &TicketNumber, mut fresh: F) -> (TicketNumber, u64)
where
    F: FnMut(u64) -> Vec<u8>,
{
    let prefix = &x.digits[..x.nine_run()];
    let mut attempt = 1u64;
    loop {
        let v = fresh(attempt);
        debug_assert!(v.iter().all(|&d| d <= 9));
        let mut digits = Vec::with_capacity(prefix.len() + v.len());
        digits.extend_from_slice(prefix);
        digits.extend_from_slice(&v);
        let candidate = TicketNumber { digits };
        if compare(&candidate, x) == Ordering::Greater {
            return (candidate, attempt);
        }
        attempt += 1;
    }
}
