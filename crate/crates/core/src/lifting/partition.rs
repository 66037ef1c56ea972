use std::fmt;

use crate::error::{Error, Result};

/// A partition of `{0, …, s−1}` into non-empty blocks. Blocks are sorted by
/// least element and each block is sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Decodes a restricted growth string: element `i` lies in block `rgs[i]`.
    fn from_rgs(rgs: &[usize]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &b) in rgs.iter().enumerate() {
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(i);
        }
        SetPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks `l`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Size of the underlying set.
    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }
}

/// One-based, e.g. `{{1,3},{2}}`.
impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let items: Vec<String> = b.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        f.write_str("}")
    }
}

/// All set partitions of an `s`-element set, as restricted growth strings in
/// lexicographic order. `s = 0` yields the single empty partition.
#[derive(Debug, Clone)]
pub struct SetPartitions {
    rgs: Vec<usize>,
    // prefix_max[i] = max(rgs[0..=i])
    prefix_max: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(s: usize) -> Self {
        SetPartitions {
            rgs: vec![0; s],
            prefix_max: vec![0; s],
            done: false,
        }
    }

    fn advance(&mut self) {
        let s = self.rgs.len();
        for i in (1..s).rev() {
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for j in i + 1..s {
                    self.rgs[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let out = SetPartition::from_rgs(&self.rgs);
        self.advance();
        Some(out)
    }
}

/// Bell numbers via the Bell triangle. Exact up to `s = 25` in `u128`.
pub fn bell_number(s: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..s {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().expect("non-empty"));
        for x in &row {
            let v = next.last().expect("non-empty") + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// All partitions of `{1, …, s}`, refusing sizes above `cap`.
pub fn set_partitions(s: usize, cap: usize) -> Result<Vec<SetPartition>> {
    check_cap(s, cap)?;
    Ok(SetPartitions::new(s).collect())
}

pub(crate) fn check_cap(s: usize, cap: usize) -> Result<()> {
    if s > cap {
        return Err(Error::PartitionCap {
            s,
            cap,
            bell: bell_number(s),
        });
    }
    Ok(())
}
