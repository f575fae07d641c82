//! Brute-force pattern counting over generated supertiles.
//!
//! Every n×n window of a rank-k supertile is encoded canonically (one byte per
//! cell, see [`OrientedTile::code`]) and deduplicated. Raising k until the
//! count stops growing gives the number of distinct n×n blocks of the
//! one-infinite-supertile tiling.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::thread;

use crate::error::{CacheError, EnumError};
use crate::supertile::{build_supertile, supertile_side, Facing, SupertileFamily, SupertileSpec, TileGrid};
use crate::tileset::{OrientedTile, Prototile};

/// Canonical serialization of an n×n block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern {
    n: usize,
    bytes: Vec<u8>,
}

impl Pattern {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn to_grid(&self) -> TileGrid {
        let cells =
            self.bytes.iter().map(|&b| OrientedTile::from_code(b).expect("pattern bytes are valid codes")).collect();
        TileGrid::new(self.n, self.n, cells).expect("pattern is square")
    }

    fn from_bytes(n: usize, bytes: &[u8]) -> Option<Pattern> {
        if bytes.len() != n * n || bytes.iter().any(|&b| OrientedTile::from_code(b).is_none()) {
            return None;
        }
        Some(Pattern { n, bytes: bytes.to_vec() })
    }
}

/// Encodes a square window; `None` if it is not square.
pub fn canonical_encode(window: &TileGrid) -> Option<Pattern> {
    (window.width() == window.height()).then(|| Pattern { n: window.width(), bytes: window.codes() })
}

/// Distinct n×n patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSet {
    n: usize,
    members: HashSet<Box<[u8]>>,
}

impl PatternSet {
    pub fn new(n: usize) -> PatternSet {
        PatternSet { n, members: HashSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self) -> u64 {
        self.members.len() as u64
    }

    /// Returns `true` if the pattern was not yet present.
    pub fn insert(&mut self, p: Pattern) -> bool {
        assert_eq!(p.n, self.n, "pattern side does not match set");
        self.members.insert(p.bytes.into_boxed_slice())
    }

    pub fn contains(&self, p: &Pattern) -> bool {
        p.n == self.n && self.members.contains(p.bytes.as_slice())
    }

    pub fn union(&mut self, other: PatternSet) {
        assert_eq!(other.n, self.n, "pattern side does not match set");
        if other.members.len() > self.members.len() {
            let mine = std::mem::replace(&mut self.members, other.members);
            self.members.extend(mine);
        } else {
            self.members.extend(other.members);
        }
    }

    /// Members in lexicographic byte order.
    pub fn sorted(&self) -> Vec<Pattern> {
        let mut v: Vec<&[u8]> = self.members.iter().map(|b| &**b).collect();
        v.sort_unstable();
        v.into_iter().map(|b| Pattern { n: self.n, bytes: b.to_vec() }).collect()
    }
}

/// A cell of the top-left 2×2 of a window that must hold a bumpy corner.
/// 1-based `[row, col]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CornerPos {
    pub row: usize,
    pub col: usize,
}

impl CornerPos {
    pub fn new(row: usize, col: usize) -> CornerPos {
        CornerPos { row, col }
    }

    fn check(self, m: usize) -> Result<(), EnumError> {
        let max = m.min(2);
        if self.row == 0 || self.col == 0 || self.row > max || self.col > max {
            return Err(EnumError::BadPosition { row: self.row, col: self.col, max });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub n: usize,
    pub rank_used: u32,
    pub count: u64,
    pub stabilized: bool,
    pub counts_by_rank: Vec<(u32, u64)>,
}

impl CountReport {
    /// One row per probed rank; `stabilized` is set on the final row only.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,rank,count,stabilized\n");
        for &(rank, count) in &self.counts_by_rank {
            let flag = self.stabilized && rank == self.rank_used;
            let _ = writeln!(out, "{},{},{},{}", self.n, rank, count, flag);
        }
        out
    }
}

/// Smallest rank whose supertile fits an n×n block.
pub fn min_rank(n: usize) -> u32 {
    let mut k = 1;
    while supertile_side(k) < n {
        k += 1;
    }
    k
}

/// Window enumeration over the supertiles of one facing, with the encoded
/// grids kept per rank.
#[derive(Debug)]
pub struct Oracle {
    facing: Facing,
    threads: usize,
    cache_dir: Option<PathBuf>,
    family: SupertileFamily,
    codes: BTreeMap<u32, Arc<Vec<u8>>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(Facing::default())
    }
}

impl Oracle {
    pub fn new(facing: Facing) -> Oracle {
        Oracle { facing, threads: 1, cache_dir: None, family: SupertileFamily::new(), codes: BTreeMap::new() }
    }

    /// Number of workers used to scan windows; the result never depends on it.
    pub fn with_threads(mut self, threads: usize) -> Oracle {
        self.threads = threads.max(1);
        self
    }

    /// Directory for pattern-set files, reused across runs.
    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Oracle {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn facing(&self) -> Facing {
        self.facing
    }

    fn codes(&mut self, rank: u32) -> Result<Arc<Vec<u8>>, EnumError> {
        if let Some(c) = self.codes.get(&rank) {
            return Ok(Arc::clone(c));
        }
        let grid = if rank == self.family.rank() {
            self.family.grid(self.facing).clone()
        } else if rank > self.family.rank() {
            while self.family.rank() + 1 < rank {
                self.family.grow()?;
            }
            self.family.assemble(self.facing)?
        } else {
            build_supertile(SupertileSpec::new(rank, self.facing))?
        };
        let codes = Arc::new(grid.codes());
        self.codes.insert(rank, Arc::clone(&codes));
        Ok(codes)
    }

    fn cache_path(&self, n: usize, rank: u32, restrict: Option<CornerPos>) -> Option<PathBuf> {
        let dir = self.cache_dir.as_ref()?;
        let mut name = format!("patterns-n{n}-k{rank}-{}", self.facing);
        if let Some(p) = restrict {
            let _ = write!(name, "-r{}_{}", p.row, p.col);
        }
        name.push_str(".rps");
        Some(dir.join(name))
    }

    fn patterns(&mut self, n: usize, rank: u32, restrict: Option<CornerPos>) -> Result<PatternSet, EnumError> {
        if n == 0 {
            return Err(EnumError::EmptyBlock);
        }
        let side = supertile_side(rank);
        if n > side {
            return Err(EnumError::BlockTooLarge { n, rank, side });
        }
        if let Some(p) = restrict {
            p.check(n)?;
        }
        let cache = self.cache_path(n, rank, restrict);
        if let Some(path) = cache.as_deref().filter(|p| p.exists()) {
            let set = load_pattern_set(path)?;
            if set.n() == n {
                return Ok(set);
            }
        }
        let codes = self.codes(rank)?;
        let set = scan_windows(&codes, side, n, restrict, self.threads);
        if let Some(path) = cache {
            if let Some(dir) = path.parent() {
                fs::create_dir_all(dir).map_err(|source| CacheError::Io { path: dir.to_path_buf(), source })?;
            }
            save_pattern_set(&set, &path)?;
        }
        Ok(set)
    }

    /// All distinct n×n windows of the rank-`rank` supertile.
    pub fn distinct_patterns(&mut self, n: usize, rank: u32) -> Result<PatternSet, EnumError> {
        self.patterns(n, rank, None)
    }

    /// Distinct m×m windows with a bumpy corner at `pos`.
    pub fn restricted_patterns(&mut self, m: usize, pos: CornerPos, rank: u32) -> Result<PatternSet, EnumError> {
        self.patterns(m, rank, Some(pos))
    }

    /// Raises the rank from the smallest that fits until two consecutive
    /// ranks agree, or `k_max` is reached.
    pub fn count_stabilized(
        &mut self,
        n: usize,
        k_max: u32,
        restrict: Option<CornerPos>,
    ) -> Result<CountReport, EnumError> {
        let k_min = min_rank(n.max(1));
        if k_max < k_min {
            return Err(EnumError::BlockTooLarge { n, rank: k_max, side: supertile_side(k_max) });
        }
        let mut counts_by_rank: Vec<(u32, u64)> = Vec::new();
        let mut stabilized = false;
        for k in k_min..=k_max {
            let count = self.patterns(n, k, restrict)?.count();
            let plateau = counts_by_rank.last().is_some_and(|&(_, prev)| prev == count);
            counts_by_rank.push((k, count));
            if plateau {
                stabilized = true;
                break;
            }
        }
        let &(rank_used, count) = counts_by_rank.last().expect("at least one rank probed");
        Ok(CountReport { n, rank_used, count, stabilized, counts_by_rank })
    }
}

/// Collects the distinct n×n windows of a `side`-square code grid. Top-left
/// rows are split into contiguous ranges, one per worker, and the private sets
/// are merged afterwards.
fn scan_windows(codes: &[u8], side: usize, n: usize, restrict: Option<CornerPos>, threads: usize) -> PatternSet {
    let rows = side - n + 1;
    let workers = threads.clamp(1, rows);
    let scan = |lo: usize, hi: usize| {
        let mut set: HashSet<Box<[u8]>> = HashSet::new();
        let mut buf = vec![0u8; n * n];
        for r in lo..hi {
            for c in 0..rows {
                if let Some(p) = restrict {
                    let code = codes[(r + p.row - 1) * side + c + p.col - 1];
                    if code >> 3 != Prototile::BumpyCorner.index() as u8 {
                        continue;
                    }
                }
                for i in 0..n {
                    let start = (r + i) * side + c;
                    buf[i * n..(i + 1) * n].copy_from_slice(&codes[start..start + n]);
                }
                if !set.contains(buf.as_slice()) {
                    set.insert(buf.clone().into_boxed_slice());
                }
            }
        }
        set
    };
    let mut out = PatternSet::new(n);
    if workers == 1 {
        out.members = scan(0, rows);
        return out;
    }
    let bounds: Vec<(usize, usize)> = (0..workers).map(|w| (rows * w / workers, rows * (w + 1) / workers)).collect();
    let parts: Vec<HashSet<Box<[u8]>>> = thread::scope(|s| {
        let handles: Vec<_> = bounds.iter().map(|&(lo, hi)| s.spawn(move || scan(lo, hi))).collect();
        handles.into_iter().map(|h| h.join().expect("window scan worker panicked")).collect()
    });
    for part in parts {
        out.union(PatternSet { n, members: part });
    }
    out
}

pub fn distinct_patterns(n: usize, rank: u32) -> Result<PatternSet, EnumError> {
    Oracle::default().distinct_patterns(n, rank)
}

pub fn count_stabilized(n: usize, k_max: u32) -> Result<CountReport, EnumError> {
    Oracle::default().count_stabilized(n, k_max, None)
}

pub fn restricted_count(m: usize, pos: CornerPos, rank: u32) -> Result<u64, EnumError> {
    Ok(Oracle::default().restricted_patterns(m, pos, rank)?.count())
}

const MAGIC: &[u8; 8] = b"RBPATSET";
pub const FORMAT_VERSION: u16 = 1;

/// Writes `ps` as: magic `RBPATSET`, u16 version, u32 n, u64 member count,
/// then each member as a u32 length and its bytes, in lexicographic order.
/// All integers little-endian.
pub fn encode_pattern_set(ps: &PatternSet) -> Vec<u8> {
    let members = ps.sorted();
    let mut out = Vec::with_capacity(22 + members.len() * (4 + ps.n * ps.n));
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    out.extend_from_slice(&(ps.n as u32).to_le_bytes());
    out.extend_from_slice(&(members.len() as u64).to_le_bytes());
    for m in &members {
        out.extend_from_slice(&(m.bytes.len() as u32).to_le_bytes());
        out.extend_from_slice(&m.bytes);
    }
    out
}

struct Reader<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn corrupt(&self, message: &str) -> CacheError {
        CacheError::Corrupt { offset: self.pos as u64, message: message.to_string() }
    }

    fn take(&mut self, len: usize, what: &str) -> Result<&'a [u8], CacheError> {
        if self.data.len() - self.pos < len {
            return Err(self.corrupt(&format!("truncated {what}")));
        }
        let s = &self.data[self.pos..self.pos + len];
        self.pos += len;
        Ok(s)
    }

    fn array<const N: usize>(&mut self, what: &str) -> Result<[u8; N], CacheError> {
        Ok(self.take(N, what)?.try_into().unwrap())
    }
}

pub fn decode_pattern_set(data: &[u8]) -> Result<PatternSet, CacheError> {
    let mut rd = Reader { data, pos: 0 };
    if rd.take(MAGIC.len(), "magic")? != MAGIC {
        rd.pos = 0;
        return Err(rd.corrupt("bad magic"));
    }
    let version = u16::from_le_bytes(rd.array("version")?);
    if version != FORMAT_VERSION {
        return Err(CacheError::VersionMismatch { found: version, supported: FORMAT_VERSION });
    }
    let n = u32::from_le_bytes(rd.array("block side")?) as usize;
    let count = u64::from_le_bytes(rd.array("member count")?);
    let mut set = PatternSet::new(n);
    let mut prev: Option<&[u8]> = None;
    for _ in 0..count {
        let start = rd.pos;
        let len = u32::from_le_bytes(rd.array("record length")?) as usize;
        let bytes = rd.take(len, "record")?;
        let pattern = Pattern::from_bytes(n, bytes).ok_or_else(|| {
            rd.pos = start;
            rd.corrupt("record is not a valid pattern")
        })?;
        if prev.is_some_and(|p| p >= bytes) {
            rd.pos = start;
            return Err(rd.corrupt("records out of order"));
        }
        prev = Some(bytes);
        set.insert(pattern);
    }
    if rd.pos != data.len() {
        return Err(rd.corrupt("trailing bytes"));
    }
    Ok(set)
}

pub fn save_pattern_set(ps: &PatternSet, path: &Path) -> Result<(), CacheError> {
    fs::write(path, encode_pattern_set(ps)).map_err(|source| CacheError::Io { path: path.to_path_buf(), source })
}

pub fn load_pattern_set(path: &Path) -> Result<PatternSet, CacheError> {
    let data = fs::read(path).map_err(|source| CacheError::Io { path: path.to_path_buf(), source })?;
    decode_pattern_set(&data)
}

/// Format version stored in a pattern-set file, checked against the magic.
pub fn peek_version(data: &[u8]) -> Result<u16, CacheError> {
    let mut rd = Reader { data, pos: 0 };
    if rd.take(MAGIC.len(), "magic")? != MAGIC {
        rd.pos = 0;
        return Err(rd.corrupt("bad magic"));
    }
    Ok(u16::from_le_bytes(rd.array("version")?))
}
