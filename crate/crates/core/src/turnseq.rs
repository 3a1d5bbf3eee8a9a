//! Turn sequences and their purely combinatorial quantities.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Turn {
    L,
    R,
}

impl Turn {
    pub fn flip(self) -> Turn {
        match self {
            Turn::L => Turn::R,
            Turn::R => Turn::L,
        }
    }

    /// +1 for a left turn, -1 for a right turn.
    pub fn sign(self) -> i64 {
        match self {
            Turn::L => 1,
            Turn::R => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Turn::L => 'L',
            Turn::R => 'R',
        }
    }
}

/// One of the four axis directions. The discriminant is the residue mod 4
/// of the prefix number that produces it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    PosX = 0,
    PosY = 1,
    NegX = 2,
    NegY = 3,
}

impl Dir {
    pub const ALL: [Dir; 4] = [Dir::PosX, Dir::PosY, Dir::NegX, Dir::NegY];

    pub fn from_prefix(t: i64) -> Dir {
        Dir::ALL[t.rem_euclid(4) as usize]
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn opposite(self) -> Dir {
        Dir::from_prefix(self as i64 + 2)
    }

    pub fn ccw(self) -> Dir {
        Dir::from_prefix(self as i64 + 1)
    }

    pub fn cw(self) -> Dir {
        Dir::from_prefix(self as i64 + 3)
    }

    pub fn turned(self, t: Turn) -> Dir {
        Dir::from_prefix(self as i64 + t.sign())
    }

    pub fn unit(self) -> (i64, i64) {
        match self {
            Dir::PosX => (1, 0),
            Dir::PosY => (0, 1),
            Dir::NegX => (-1, 0),
            Dir::NegY => (0, -1),
        }
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, Dir::PosX | Dir::NegX)
    }

    /// Hook vocabulary: right, up, left, down.
    pub fn hook_name(self) -> &'static str {
        match self {
            Dir::PosX => "right",
            Dir::PosY => "up",
            Dir::NegX => "left",
            Dir::NegY => "down",
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Dir::PosX => "+x",
            Dir::PosY => "+y",
            Dir::NegX => "-x",
            Dir::NegY => "-y",
        }
    }
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Dir {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Dir {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| serde::de::Error::custom(format!("unknown axis {s}")))
    }
}

impl FromStr for Dir {
    type Err = Error;
    fn from_str(s: &str) -> Result<Dir> {
        match s {
            "+x" | "x+" => Ok(Dir::PosX),
            "+y" | "y+" => Ok(Dir::PosY),
            "-x" | "x-" => Ok(Dir::NegX),
            "-y" | "y-" => Ok(Dir::NegY),
            _ => Err(Error::InvalidCharacter { position: 0 }),
        }
    }
}

/// A validated word over {L, R}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct TurnSequence {
    turns: Vec<Turn>,
}

impl TurnSequence {
    pub fn new(turns: Vec<Turn>) -> Self {
        TurnSequence { turns }
    }

    /// Parses a word of `L`/`R` characters, case-insensitively.
    /// Positions in errors are 1-based.
    pub fn parse(text: &str) -> Result<Self> {
        let mut turns = Vec::with_capacity(text.len());
        for (i, c) in text.chars().enumerate() {
            match c {
                'L' | 'l' => turns.push(Turn::L),
                'R' | 'r' => turns.push(Turn::R),
                _ => return Err(Error::InvalidCharacter { position: i + 1 }),
            }
        }
        Ok(TurnSequence { turns })
    }

    pub fn turns(&self) -> &[Turn] {
        &self.turns
    }

    pub fn len(&self) -> usize {
        self.turns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.turns.is_empty()
    }

    /// Turn σ_i, 1-based.
    pub fn turn(&self, i: usize) -> Turn {
        self.turns[i - 1]
    }

    pub fn first(&self) -> Option<Turn> {
        self.turns.first().copied()
    }

    pub fn last(&self) -> Option<Turn> {
        self.turns.last().copied()
    }

    pub fn lefts(&self) -> usize {
        self.turns.iter().filter(|&&t| t == Turn::L).count()
    }

    pub fn rights(&self) -> usize {
        self.len() - self.lefts()
    }

    pub fn excess(&self) -> i64 {
        self.lefts() as i64 - self.rights() as i64
    }

    pub fn is_staircase(&self) -> bool {
        self.turns.windows(2).all(|w| w[0] != w[1])
    }

    pub fn slice(&self, from: usize, to: usize) -> TurnSequence {
        TurnSequence::new(self.turns[from..to].to_vec())
    }

    pub fn reverse_complement(&self) -> TurnSequence {
        TurnSequence::new(self.turns.iter().rev().map(|t| t.flip()).collect())
    }

    pub fn mirror(&self) -> TurnSequence {
        TurnSequence::new(self.turns.iter().map(|t| t.flip()).collect())
    }

    pub fn prepend(&self, t: Turn) -> TurnSequence {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(t);
        v.extend_from_slice(&self.turns);
        TurnSequence::new(v)
    }

    pub fn drop_last(&self) -> Result<TurnSequence> {
        if self.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(TurnSequence::new(self.turns[..self.len() - 1].to_vec()))
    }

    pub fn transform(&self, kind: Transform) -> Result<TurnSequence> {
        match kind {
            Transform::ReverseComplement => Ok(self.reverse_complement()),
            Transform::Mirror => Ok(self.mirror()),
            Transform::Prepend(t) => Ok(self.prepend(t)),
            Transform::DropLast => self.drop_last(),
        }
    }

    pub fn profile(&self) -> PrefixProfile {
        PrefixProfile::of(self)
    }

    pub fn hooks(&self) -> Vec<Hook> {
        find_hooks(self)
    }

    pub fn has_hook(&self, d: Dir) -> bool {
        self.hooks().iter().any(|h| h.direction == d)
    }

    pub fn measures(&self) -> Measures {
        Measures::of(self)
    }
}

impl fmt::Display for TurnSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.turns {
            write!(f, "{}", t.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for TurnSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TurnSequence::parse(s)
    }
}

impl Serialize for TurnSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TurnSequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        TurnSequence::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    ReverseComplement,
    Mirror,
    Prepend(Turn),
    DropLast,
}

/// Prefix excess numbers δ_0..δ_n and the direction of every segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixProfile {
    pub deltas: Vec<i64>,
    pub directions: Vec<Dir>,
}

impl PrefixProfile {
    pub fn of(seq: &TurnSequence) -> Self {
        let mut deltas = Vec::with_capacity(seq.len() + 1);
        let mut d = 0i64;
        deltas.push(d);
        for t in seq.turns() {
            d += t.sign();
            deltas.push(d);
        }
        let directions = deltas.iter().map(|&t| Dir::from_prefix(t)).collect();
        PrefixProfile { deltas, directions }
    }

    /// `(i(w), j(w))`: last and first index with δ = w.
    pub fn boundary_indices(&self, w: i64) -> Option<(usize, usize)> {
        let first = self.deltas.iter().position(|&d| d == w)?;
        let last = self.deltas.iter().rposition(|&d| d == w)?;
        Some((last, first))
    }

    pub fn contains(&self, w: i64) -> bool {
        self.deltas.contains(&w)
    }
}

pub fn boundary_indices(seq: &TurnSequence, w: i64) -> Option<(usize, usize)> {
    seq.profile().boundary_indices(w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HookKind {
    LL,
    RR,
}

impl HookKind {
    pub fn as_str(self) -> &'static str {
        match self {
            HookKind::LL => "LL",
            HookKind::RR => "RR",
        }
    }
}

/// Two equal consecutive turns σ_i σ_{i+1}, with `index = i` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Hook {
    pub index: usize,
    pub direction: Dir,
    pub kind: HookKind,
}

impl fmt::Display for Hook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}@{}", self.direction.hook_name(), self.kind.as_str(), self.index)
    }
}

pub fn find_hooks(seq: &TurnSequence) -> Vec<Hook> {
    let prof = seq.profile();
    let t = seq.turns();
    (1..seq.len())
        .filter(|&i| t[i - 1] == t[i])
        .map(|i| Hook {
            index: i,
            direction: Dir::from_prefix(prof.deltas[i]),
            kind: if t[i] == Turn::L { HookKind::LL } else { HookKind::RR },
        })
        .collect()
}

/// Monotone and staircase counts measured from either end of the chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measures {
    pub mo: [usize; 4],
    pub mp: [usize; 4],
    stair_o: [[usize; 4]; 4],
    stair_p: [[usize; 4]; 4],
}

fn monotone_count<'a>(dirs: impl Iterator<Item = &'a Dir>, z: Dir) -> usize {
    let mut c = 0;
    for &d in dirs {
        if d == z.opposite() {
            break;
        }
        if d == z {
            c += 1;
        }
    }
    c
}

fn stair_count<'a>(dirs: impl Iterator<Item = &'a Dir>, z1: Dir, z2: Dir) -> usize {
    let mut c = 0;
    for &d in dirs {
        if d != z1 && d != z2 {
            break;
        }
        if d == z2 {
            c += 1;
        }
    }
    c
}

impl Measures {
    pub fn of(seq: &TurnSequence) -> Self {
        let dirs = seq.profile().directions;
        let mut m = Measures {
            mo: [0; 4],
            mp: [0; 4],
            stair_o: [[0; 4]; 4],
            stair_p: [[0; 4]; 4],
        };
        for z in Dir::ALL {
            m.mo[z.index()] = monotone_count(dirs.iter(), z);
            m.mp[z.index()] = monotone_count(dirs.iter().rev(), z);
            for z2 in Dir::ALL {
                if z2.is_horizontal() == z.is_horizontal() {
                    continue;
                }
                m.stair_o[z.index()][z2.index()] = stair_count(dirs.iter(), z, z2);
                m.stair_p[z.index()][z2.index()] = stair_count(dirs.iter().rev(), z, z2);
            }
        }
        m
    }

    pub fn mo(&self, z: Dir) -> usize {
        self.mo[z.index()]
    }

    pub fn mp(&self, z: Dir) -> usize {
        self.mp[z.index()]
    }

    /// z2-segments in the maximal (z1, z2)-staircase containing o.
    /// Zero for parallel pairs.
    pub fn stair_o(&self, z1: Dir, z2: Dir) -> usize {
        self.stair_o[z1.index()][z2.index()]
    }

    pub fn stair_p(&self, z1: Dir, z2: Dir) -> usize {
        self.stair_p[z1.index()][z2.index()]
    }
}

/// No segment heads −x.
pub fn is_x_monotone(seq: &TurnSequence) -> bool {
    !seq.profile().directions.contains(&Dir::NegX)
}
