//! Fixed-width bitsets over world indices. Internal representation of every
//! model set in the crate; unused bits above `len` are kept at zero so that
//! derived equality and hashing are structural.

use alloc::vec;
use alloc::vec::Vec;

const BLOCK: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Bits {
    len: u64,
    blocks: Vec<u64>,
}

impl Bits {
    pub fn empty(len: u64) -> Self {
        let nblocks = ((len as usize) + BLOCK - 1) / BLOCK;
        Bits {
            len,
            blocks: vec![0; nblocks.max(1)],
        }
    }

    pub fn full(len: u64) -> Self {
        let mut b = Bits::empty(len);
        for i in 0..b.blocks.len() {
            b.blocks[i] = !0;
        }
        b.mask_top();
        b
    }

    pub fn singleton(len: u64, index: u64) -> Self {
        let mut b = Bits::empty(len);
        b.insert(index);
        b
    }

    pub fn from_indices(len: u64, indices: impl IntoIterator<Item = u64>) -> Self {
        let mut b = Bits::empty(len);
        for i in indices {
            b.insert(i);
        }
        b
    }

    fn mask_top(&mut self) {
        let rem = (self.len as usize) % BLOCK;
        if rem != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
        if self.len == 0 {
            self.blocks[0] = 0;
        }
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn contains(&self, index: u64) -> bool {
        debug_assert!(index < self.len);
        self.blocks[(index as usize) / BLOCK] >> ((index as usize) % BLOCK) & 1 == 1
    }

    pub fn insert(&mut self, index: u64) {
        debug_assert!(index < self.len);
        self.blocks[(index as usize) / BLOCK] |= 1 << ((index as usize) % BLOCK);
    }

    pub fn remove(&mut self, index: u64) {
        debug_assert!(index < self.len);
        self.blocks[(index as usize) / BLOCK] &= !(1 << ((index as usize) % BLOCK));
    }

    pub fn count(&self) -> u64 {
        self.blocks.iter().map(|b| b.count_ones() as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn and(&self, other: &Bits) -> Bits {
        debug_assert_eq!(self.len, other.len);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a & b)
            .collect();
        Bits {
            len: self.len,
            blocks,
        }
    }

    pub fn or(&self, other: &Bits) -> Bits {
        debug_assert_eq!(self.len, other.len);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a | b)
            .collect();
        Bits {
            len: self.len,
            blocks,
        }
    }

    /// Set difference `self \ other`.
    pub fn minus(&self, other: &Bits) -> Bits {
        debug_assert_eq!(self.len, other.len);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a & !b)
            .collect();
        Bits {
            len: self.len,
            blocks,
        }
    }

    pub fn not(&self) -> Bits {
        let mut b = Bits {
            len: self.len,
            blocks: self.blocks.iter().map(|&x| !x).collect(),
        };
        b.mask_top();
        b
    }

    pub fn or_assign(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn subset_of(&self, other: &Bits) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Bits) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.blocks.iter().zip(&other.blocks).any(|(a, b)| a & b != 0)
    }

    pub fn first(&self) -> Option<u64> {
        for (i, &b) in self.blocks.iter().enumerate() {
            if b != 0 {
                return Some((i * BLOCK) as u64 + b.trailing_zeros() as u64);
            }
        }
        None
    }

    pub fn iter(&self) -> BitIter<'_> {
        BitIter {
            bits: self,
            block: 0,
            cur: self.blocks[0],
        }
    }
}

pub(crate) struct BitIter<'a> {
    bits: &'a Bits,
    block: usize,
    cur: u64,
}

impl Iterator for BitIter<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as u64;
                self.cur &= self.cur - 1;
                return Some((self.block * BLOCK) as u64 + tz);
            }
            self.block += 1;
            if self.block >= self.bits.blocks.len() {
                return None;
            }
            self.cur = self.bits.blocks[self.block];
        }
    }
}

impl core::fmt::Debug for Bits {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
