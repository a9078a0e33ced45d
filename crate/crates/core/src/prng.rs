//! Hash-derived decimal digit streams.
//!
//! Every ticket number is built from digits produced here. A [`Tag`] names a
//! stream; block `c` of the stream is `SHA256(tag || 0x00 || ascii(c))`, and
//! bytes of each block are mapped to digits by rejection (bytes `>= 250`
//! are skipped, the rest contribute `b % 10`).

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Bytes at or above this value are discarded; 250 is the largest multiple
/// of ten that fits in a byte.
pub const REJECTION_THRESHOLD: u8 = 250;

const SEPARATOR: u8 = 0x00;

/// An ordered list of NUL-free byte strings, serialized by joining the parts
/// with single NUL bytes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tag {
    serialized: Vec<u8>,
    parts: usize,
}

impl Tag {
    pub fn new<I, P>(parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = P>,
        P: AsRef<[u8]>,
    {
        let mut serialized = Vec::new();
        let mut count = 0;
        for (i, part) in parts.into_iter().enumerate() {
            let part = part.as_ref();
            if part.contains(&SEPARATOR) {
                return Err(Error::NulInTag { part: i });
            }
            if i > 0 {
                serialized.push(SEPARATOR);
            }
            serialized.extend_from_slice(part);
            count += 1;
        }
        Ok(Tag {
            serialized,
            parts: count,
        })
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.serialized
    }

    pub fn num_parts(&self) -> usize {
        self.parts
    }
}

/// `SHA256(serialize(tag) || 0x00 || ascii_decimal(counter))`.
pub fn digest_block(tag: &Tag, counter: u64) -> [u8; 32] {
    let mut hasher = Sha256::new();
    hasher.update(tag.as_bytes());
    hasher.update([SEPARATOR]);
    hasher.update(counter.to_string().as_bytes());
    hasher.finalize().into()
}

/// An unbounded stream of uniform decimal digits determined entirely by its tag.
#[derive(Debug, Clone)]
pub struct DigitStream {
    tag: Tag,
    block_counter: u64,
    block: [u8; 32],
    offset: usize,
    bytes_consumed: u64,
    bytes_rejected: u64,
}

impl DigitStream {
    pub fn new(tag: Tag) -> Self {
        DigitStream {
            tag,
            block_counter: 0,
            block: [0; 32],
            // forces the first block to be hashed on demand
            offset: 32,
            bytes_consumed: 0,
            bytes_rejected: 0,
        }
    }

    pub fn tag(&self) -> &Tag {
        &self.tag
    }

    /// Number of hash blocks computed so far.
    pub fn blocks_used(&self) -> u64 {
        self.block_counter
    }

    pub fn bytes_consumed(&self) -> u64 {
        self.bytes_consumed
    }

    pub fn bytes_rejected(&self) -> u64 {
        self.bytes_rejected
    }

    fn next_byte(&mut self) -> u8 {
        if self.offset == self.block.len() {
            self.block = digest_block(&self.tag, self.block_counter);
            self.block_counter += 1;
            self.offset = 0;
        }
        let b = self.block[self.offset];
        self.offset += 1;
        self.bytes_consumed += 1;
        b
    }

    pub fn next_digit(&mut self) -> u8 {
        loop {
            let b = self.next_byte();
            if b < REJECTION_THRESHOLD {
                return b % 10;
            }
            self.bytes_rejected += 1;
        }
    }

    /// Appends `count` digits to `out`.
    pub fn fill_digits(&mut self, out: &mut Vec<u8>, count: usize) {
        out.reserve(count);
        for _ in 0..count {
            out.push(self.next_digit());
        }
    }

    pub fn next_digits(&mut self, count: usize) -> Vec<u8> {
        let mut out = Vec::with_capacity(count);
        self.fill_digits(&mut out, count);
        out
    }
}
