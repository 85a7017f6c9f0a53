//! Absorb-connect-cover Hamilton cycle heuristic.
//!
//! Five sequential stages: reserve connector vertices, build an
//! absorbing path out of swap stations, cover the rest with disjoint
//! paths, close everything into one cycle through the reservoir, absorb
//! the remainder into the stations. Every success is revalidated as a
//! Hamilton l-cycle before it is reported; failures name their stage
//! and obstruction.
//!
//! A swap station is one embedded gadget copy plus one swapper path per
//! special vertex. In the resting state the specials sit inside their
//! swapper paths and the gadget path omits them. Absorbing a (k-l)-set
//! re-realizes each swapper path over its witness set and one new
//! vertex, with the same ordered ends, and flips the gadget path to the
//! version that takes the specials back. All ends are preserved, so the
//! surrounding cycle never notices.

use crate::absorbers::{end_matched_order, for_each_gadget_embedding_in_order, pair_spanning_orders};
use crate::bitset::VertexSet;
use crate::combin::{rational, Rational};
use crate::constructions::{search_gadget, GadgetError};
use crate::hypergraph::Hypergraph;
use crate::paths::{connect, EllCycle, EllPath};
use crate::rng::SplitMix64;
use crate::tilings::dominant_edge_vector;
use itertools::Itertools;
use num::{BigInt, ToPrimitive};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct PipelineParams {
    /// fraction of vertices reserved for connector interiors
    pub reservoir_fraction: Rational,
    /// swap stations to build; each absorbs one (k-l)-set
    pub capacity: usize,
    /// reserve quota p: 4p extra (k-l)-sets kept back for rebalancing
    pub reserve_p: usize,
    /// robustness threshold for the descriptor's edge-vector census
    pub mu: Rational,
    /// longest connector the assembly may use
    pub connect_len: usize,
    /// witness rewrites allowed while absorbing before giving up
    pub hop_budget: usize,
    pub seed: u64,
}

impl Default for PipelineParams {
    fn default() -> Self {
        PipelineParams {
            reservoir_fraction: rational(1, 10),
            capacity: 2,
            reserve_p: 0,
            mu: rational(1, 1000),
            connect_len: 2,
            hop_budget: 4,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Reservoir,
    AbsorbingPath,
    Cover,
    Connect,
    Absorb,
}

impl std::fmt::Display for Stage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Stage::Reservoir => "reservoir",
            Stage::AbsorbingPath => "absorbing_path",
            Stage::Cover => "cover",
            Stage::Connect => "connect",
            Stage::Absorb => "absorb",
        };
        f.write_str(name)
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PipelineError {
    #[error("pipeline needs 2*ell < k, got k={k} ell={ell}")]
    WideOverlap { k: usize, ell: usize },
    #[error("{stride} must divide n={n}")]
    Divisibility { n: usize, stride: usize },
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error("station {station}: no gadget embedding in the remaining vertices")]
    NoEmbedding { station: usize },
    #[error("station {station}, swapper {swapper}: no witness pair of edges left")]
    NoWitness { station: usize, swapper: usize },
    #[error("no connector from {from} to {to}")]
    Connection { from: String, to: String },
    #[error("leftover of {got} vertices exceeds free absorb capacity {capacity}")]
    CapacityExceeded { got: usize, capacity: usize },
    #[error("leftover {leftover:?} resists absorption at every free station")]
    AbsorptionStuck { leftover: Vec<u32> },
    #[error("nothing to assemble: no absorbing path and no cover paths")]
    EmptyAssembly,
}

impl PipelineError {
    fn stage(&self) -> Stage {
        match self {
            PipelineError::WideOverlap { .. }
            | PipelineError::Divisibility { .. }
            | PipelineError::Gadget(_)
            | PipelineError::NoEmbedding { .. }
            | PipelineError::NoWitness { .. } => Stage::AbsorbingPath,
            PipelineError::Connection { .. } | PipelineError::EmptyAssembly => Stage::Connect,
            PipelineError::CapacityExceeded { .. } | PipelineError::AbsorptionStuck { .. } => {
                Stage::Absorb
            }
        }
    }
}

/// Which (k-l)-set index-vector mixtures the path can absorb: x sets
/// splitting (m, s-m) over the two halves plus y sets splitting
/// (m-1, s-m+1), padded by the 4p reserve. Negative x or y lean on the
/// reserve for rebalancing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexCombo {
    pub x: i64,
    pub y: i64,
    pub sets: usize,
    pub v1: usize,
    pub v2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbsorbDescriptor {
    pub set_size: usize,
    pub stations: usize,
    pub reserve_p: usize,
    pub part_sizes: [usize; 2],
    pub dominant_vector: Option<Vec<usize>>,
    pub m: Option<usize>,
    pub combos: Vec<IndexCombo>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Piece {
    pub label: String,
    /// connector pieces hold interior vertices only, so concatenating
    /// all pieces in order yields the path order without duplicates
    pub order: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwapStation {
    /// gadget image, indexed like the abstract gadget vertices
    pub image: Vec<u32>,
    /// specials w_i, the gadget vertices that can leave its path
    pub specials: Vec<u32>,
    /// gadget spanning order with the specials back in
    pub q_order: Vec<u32>,
    /// current witness set per swapper, sorted
    pub witnesses: Vec<Vec<u32>>,
    /// ordered ends per swapper piece, fixed by the surrounding path
    pub swapper_ends: Vec<(Vec<u32>, Vec<u32>)>,
    pub swapper_pieces: Vec<usize>,
    pub gadget_piece: usize,
    /// the set this station absorbed, if it fired
    pub absorbed: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbsorbingPath {
    pub k: usize,
    pub ell: usize,
    pub pieces: Vec<Piece>,
    pub stations: Vec<SwapStation>,
    pub descriptor: AbsorbDescriptor,
}

impl AbsorbingPath {
    pub fn order(&self) -> Vec<u32> {
        self.pieces.iter().flat_map(|p| p.order.iter().copied()).collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_members(self.order())
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn to_path(&self) -> Option<EllPath> {
        if self.is_empty() {
            return None;
        }
        Some(EllPath::new(self.k, self.ell, self.order()).expect("pieces stay path-shaped"))
    }

    pub fn free_stations(&self) -> usize {
        self.stations.iter().filter(|s| s.absorbed.is_none()).count()
    }
}

/// One swapper structure: a witness pair of edges through `w` realized
/// as a path with `w` interior.
struct StationWitness {
    t: Vec<u32>,
    order: Vec<u32>,
    begin: Vec<u32>,
    end: Vec<u32>,
}

fn find_station_witness(
    h: &Hypergraph,
    ell: usize,
    w: u32,
    used: &VertexSet,
) -> Option<StationWitness> {
    let w_only = VertexSet::singleton(w);
    for e1 in h.edges() {
        if !e1.contains(w) || !e1.difference(&w_only).is_disjoint(used) {
            continue;
        }
        for e2 in h.edges() {
            if e1.intersect_len(e2) != ell || !e2.difference(e1).is_disjoint(used) {
                continue;
            }
            let mut map = BTreeMap::new();
            pair_spanning_orders(e1, e2, ell, Some(w), &mut map);
            pair_spanning_orders(e2, e1, ell, Some(w), &mut map);
            if let Some(((begin, end), order)) = map.into_iter().next() {
                let t = e1.union(e2).difference(&w_only).members();
                return Some(StationWitness { t, order, begin, end });
            }
        }
    }
    None
}

/// Equal-halves split of the vertices, shuffled by the seeded stream.
fn seeded_split(n: usize, rng: &mut SplitMix64) -> [VertexSet; 2] {
    let mut ids: Vec<u32> = (0..n as u32).collect();
    rng.shuffle(&mut ids);
    let half = n.div_ceil(2);
    [
        VertexSet::from_members(ids[..half].iter().copied()),
        VertexSet::from_members(ids[half..].iter().copied()),
    ]
}

fn build_descriptor(
    h: &Hypergraph,
    ell: usize,
    params: &PipelineParams,
    stations: usize,
    rng: &mut SplitMix64,
) -> AbsorbDescriptor {
    let k = h.k();
    let s = k - ell;
    let parts = seeded_split(h.n(), rng);
    let dominant = dominant_edge_vector(h, &parts, &params.mu)
        .expect("two equal halves partition the vertices");
    let m = dominant.as_ref().map(|vec| {
        let a = vec[0];
        if 2 * a <= k {
            a
        } else {
            a + 1 - ell
        }
    });
    let mut combos = Vec::new();
    if let Some(m) = m {
        let p = params.reserve_p as i64;
        let cap = stations as i64;
        for x in -2 * p..=cap {
            for y in -2 * p..=cap {
                let sets = x + y;
                let consumed = sets + 4 * p;
                if sets < 0 || consumed > cap {
                    continue;
                }
                let v1 = x * m as i64 + y * (m as i64 - 1);
                let v2 = sets * s as i64 - v1;
                if v1 < 0 || v2 < 0 {
                    continue;
                }
                combos.push(IndexCombo {
                    x,
                    y,
                    sets: sets as usize,
                    v1: v1 as usize,
                    v2: v2 as usize,
                });
            }
        }
    }
    AbsorbDescriptor {
        set_size: s,
        stations,
        reserve_p: params.reserve_p,
        part_sizes: [parts[0].len(), parts[1].len()],
        dominant_vector: dominant,
        m,
        combos,
    }
}

/// Builds the absorbing path: `capacity` stations placed by seeded
/// search among vertices outside `avoid`, their pieces connected in
/// sequence with interiors also outside `avoid`.
pub fn build_absorbing_path(
    h: &Hypergraph,
    ell: usize,
    params: &PipelineParams,
    avoid: &VertexSet,
) -> Result<AbsorbingPath, PipelineError> {
    let k = h.k();
    if 2 * ell >= k {
        return Err(PipelineError::WideOverlap { k, ell });
    }
    let gadget = search_gadget(k, ell)?;
    let mut rng = SplitMix64::new(params.seed);
    let mut station_rng = rng.fork("stations");
    let mut split_rng = rng.fork("split");

    let mut pool: Vec<u32> = (0..h.n() as u32).filter(|&v| !avoid.contains(v)).collect();
    station_rng.shuffle(&mut pool);

    let mut used = avoid.clone();
    // gather every station's parts first, then chain them with connectors
    struct PartDraft {
        label: String,
        order: Vec<u32>,
        station: usize,
        swapper: Option<usize>,
    }
    let mut drafts: Vec<PartDraft> = Vec::new();
    let mut proto: Vec<(Vec<u32>, Vec<u32>, Vec<u32>, Vec<Vec<u32>>, Vec<(Vec<u32>, Vec<u32>)>)> =
        Vec::new();
    for sidx in 0..params.capacity {
        let mut phi: Option<Vec<u32>> = None;
        for_each_gadget_embedding_in_order(h, &gadget, &used, &pool, &mut |img| {
            phi = Some(img.to_vec());
            true
        });
        let phi = phi.ok_or(PipelineError::NoEmbedding { station: sidx })?;
        for &v in &phi {
            used.insert(v);
        }
        let specials: Vec<u32> = gadget.absorbed.iter().map(|a| phi[a as usize]).collect();
        let p_order: Vec<u32> = gadget.path_p.order.iter().map(|&a| phi[a as usize]).collect();
        let q_order: Vec<u32> = gadget.path_q.order.iter().map(|&a| phi[a as usize]).collect();
        let mut witnesses = Vec::new();
        let mut ends = Vec::new();
        for (widx, &w) in specials.iter().enumerate() {
            let sw = find_station_witness(h, ell, w, &used)
                .ok_or(PipelineError::NoWitness { station: sidx, swapper: widx })?;
            for &t in &sw.t {
                used.insert(t);
            }
            drafts.push(PartDraft {
                label: format!("station {sidx} swapper {widx}"),
                order: sw.order,
                station: sidx,
                swapper: Some(widx),
            });
            witnesses.push(sw.t);
            ends.push((sw.begin, sw.end));
        }
        drafts.push(PartDraft {
            label: format!("station {sidx} gadget"),
            order: p_order,
            station: sidx,
            swapper: None,
        });
        proto.push((phi, specials, q_order, witnesses, ends));
    }

    // chain the drafted parts; connectors draw on the same free pool
    let mut pieces: Vec<Piece> = Vec::new();
    let mut stations: Vec<SwapStation> = proto
        .into_iter()
        .map(|(image, specials, q_order, witnesses, swapper_ends)| SwapStation {
            image,
            specials,
            q_order,
            witnesses,
            swapper_ends,
            swapper_pieces: Vec::new(),
            gadget_piece: 0,
            absorbed: None,
        })
        .collect();
    let mut prev: Option<(String, Vec<u32>)> = None;
    for draft in drafts {
        if let Some((prev_label, prev_end)) = prev {
            let begin = draft.order[..ell].to_vec();
            let conn = connect(h, &prev_end, &begin, &used, params.connect_len)
                .expect("chained ends are disjoint tuples")
                .ok_or(PipelineError::Connection {
                    from: prev_label,
                    to: draft.label.clone(),
                })?;
            let interior = conn.order[ell..conn.order.len() - ell].to_vec();
            for &v in &interior {
                used.insert(v);
            }
            pieces.push(Piece { label: format!("connector into {}", draft.label), order: interior });
        }
        let idx = pieces.len();
        match draft.swapper {
            Some(widx) => {
                debug_assert_eq!(stations[draft.station].swapper_pieces.len(), widx);
                stations[draft.station].swapper_pieces.push(idx);
            }
            None => stations[draft.station].gadget_piece = idx,
        }
        prev = Some((draft.label.clone(), draft.order[draft.order.len() - ell..].to_vec()));
        pieces.push(Piece { label: draft.label, order: draft.order });
    }

    let station_count = stations.len();
    let descriptor = build_descriptor(h, ell, params, station_count, &mut split_rng);
    let path = AbsorbingPath { k, ell, pieces, stations, descriptor };
    debug_assert!(path.to_path().is_none_or(|p| p.validate_in(h).valid));
    Ok(path)
}

/// Greedy vertex-disjoint l-path cover of the vertices outside `avoid`:
/// each path is seeded from a pattern pair (two edges sharing 2l
/// vertices) and extended at both ends until stuck. Returns the paths
/// and the uncovered remainder.
pub fn path_cover(h: &Hypergraph, ell: usize, avoid: &VertexSet) -> (Vec<EllPath>, VertexSet) {
    let k = h.k();
    let mut available =
        VertexSet::from_members((0..h.n() as u32).filter(|&v| !avoid.contains(v)));
    let mut paths = Vec::new();
    while let Some(seed) = cover_seed(h, ell, &available) {
        let mut order = seed.members();
        for &v in &order {
            available.remove(v);
        }
        loop {
            let grew_front = extend_front(h, ell, &mut order, &mut available);
            let grew_back = extend_back(h, ell, &mut order, &mut available);
            if !grew_front && !grew_back {
                break;
            }
        }
        paths.push(EllPath::new(k, ell, order).expect("cover growth keeps path shape"));
    }
    (paths, available)
}

/// First edge of the first available pattern pair, by edge order.
fn cover_seed(h: &Hypergraph, ell: usize, available: &VertexSet) -> Option<VertexSet> {
    for e1 in h.edges() {
        if !e1.is_subset_of(available) {
            continue;
        }
        for e2 in h.edges() {
            if e1.intersect_len(e2) == 2 * ell && e2.is_subset_of(available) {
                return Some(e1.clone());
            }
        }
    }
    None
}

fn extend_back(
    h: &Hypergraph,
    ell: usize,
    order: &mut Vec<u32>,
    available: &mut VertexSet,
) -> bool {
    let end = VertexSet::from_members(order[order.len() - ell..].iter().copied());
    for e in h.edges() {
        if !end.is_subset_of(e) {
            continue;
        }
        let fresh = e.difference(&end);
        if fresh.is_subset_of(available) {
            for v in fresh.iter() {
                available.remove(v);
            }
            order.extend(fresh.members());
            return true;
        }
    }
    false
}

fn extend_front(
    h: &Hypergraph,
    ell: usize,
    order: &mut Vec<u32>,
    available: &mut VertexSet,
) -> bool {
    let begin = VertexSet::from_members(order[..ell].iter().copied());
    for e in h.edges() {
        if !begin.is_subset_of(e) {
            continue;
        }
        let fresh = e.difference(&begin);
        if fresh.is_subset_of(available) {
            for v in fresh.iter() {
                available.remove(v);
            }
            let mut grown = fresh.members();
            grown.append(order);
            *order = grown;
            return true;
        }
    }
    false
}

/// All ways to split the sorted elements into unordered blocks of size
/// `s`; each block comes out sorted, blocks ordered by first element.
fn block_partitions(elems: &[u32], s: usize) -> Vec<Vec<Vec<u32>>> {
    if elems.is_empty() {
        return vec![Vec::new()];
    }
    let first = elems[0];
    let rest: Vec<u32> = elems[1..].to_vec();
    let mut out = Vec::new();
    for mates in rest.iter().copied().combinations(s - 1) {
        let mut block = vec![first];
        block.extend(&mates);
        let remaining: Vec<u32> =
            rest.iter().copied().filter(|v| !mates.contains(v)).collect();
        for mut tail in block_partitions(&remaining, s) {
            let mut part = vec![block.clone()];
            part.append(&mut tail);
            out.push(part);
        }
    }
    out
}

/// Absorbs `leftover` into the free stations: every vertex enters one
/// swapper path (same ends, witness plus the new vertex) and each
/// firing station flips its gadget piece to the order that takes the
/// specials back. When direct placement fails, up to `hop_budget`
/// witness rewrites may eject a witness vertex into the leftover to
/// make room. The path is modified only on success.
pub fn absorb_leftover(
    h: &Hypergraph,
    path: &mut AbsorbingPath,
    leftover: &VertexSet,
    hop_budget: usize,
) -> Result<(), PipelineError> {
    let s = path.k - path.ell;
    assert!(leftover.len() % s == 0, "leftover size must be a multiple of k-l");
    if leftover.is_empty() {
        return Ok(());
    }
    let free = path.free_stations();
    if leftover.len() / s > free {
        return Err(PipelineError::CapacityExceeded {
            got: leftover.len(),
            capacity: free * s,
        });
    }
    let mut work = path.clone();
    if try_absorb(h, &mut work, &leftover.members(), hop_budget) {
        *path = work;
        Ok(())
    } else {
        Err(PipelineError::AbsorptionStuck { leftover: leftover.members() })
    }
}

fn try_absorb(h: &Hypergraph, path: &mut AbsorbingPath, leftover: &[u32], hops: usize) -> bool {
    let s = path.k - path.ell;
    if leftover.len() / s > path.free_stations() {
        return false;
    }
    for partition in block_partitions(leftover, s) {
        let mut work = path.clone();
        if assign_blocks(h, &mut work, &partition) {
            *path = work;
            return true;
        }
    }
    if hops == 0 {
        return false;
    }
    // eject one witness vertex to make room for a stuck one, then retry
    for &v in leftover {
        for sidx in 0..path.stations.len() {
            if path.stations[sidx].absorbed.is_some() {
                continue;
            }
            for widx in 0..path.stations[sidx].witnesses.len() {
                let st = &path.stations[sidx];
                let (begin, end) = st.swapper_ends[widx].clone();
                let w = st.specials[widx];
                let witness = st.witnesses[widx].clone();
                for &u in &witness {
                    if begin.contains(&u) || end.contains(&u) {
                        continue;
                    }
                    let span = VertexSet::from_members(
                        witness.iter().copied().filter(|&x| x != u).chain([v, w]),
                    );
                    let Some(order) = end_matched_order(h, &span, path.ell, &begin, &end)
                    else {
                        continue;
                    };
                    let mut work = path.clone();
                    let piece = work.stations[sidx].swapper_pieces[widx];
                    work.stations[sidx].witnesses[widx] =
                        span.difference(&VertexSet::singleton(w)).members();
                    work.pieces[piece].order = order;
                    let next: Vec<u32> = leftover
                        .iter()
                        .copied()
                        .filter(|&x| x != v)
                        .chain([u])
                        .sorted()
                        .collect();
                    if try_absorb(h, &mut work, &next, hops - 1) {
                        *path = work;
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Backtracking assignment of the blocks to free stations; commits the
/// piece rewrites as it recurses and undoes them on failure.
fn assign_blocks(h: &Hypergraph, path: &mut AbsorbingPath, blocks: &[Vec<u32>]) -> bool {
    let Some((block, rest)) = blocks.split_first() else {
        return true;
    };
    for sidx in 0..path.stations.len() {
        if path.stations[sidx].absorbed.is_some() {
            continue;
        }
        'perm: for assignment in block.iter().copied().permutations(block.len()) {
            let st = &path.stations[sidx];
            let mut orders = Vec::with_capacity(assignment.len());
            for (widx, &v) in assignment.iter().enumerate() {
                let (begin, end) = &st.swapper_ends[widx];
                let span =
                    VertexSet::from_members(st.witnesses[widx].iter().copied().chain([v]));
                match end_matched_order(h, &span, path.ell, begin, end) {
                    Some(order) => orders.push(order),
                    None => continue 'perm,
                }
            }
            let saved: Vec<Vec<u32>> = st
                .swapper_pieces
                .iter()
                .map(|&p| path.pieces[p].order.clone())
                .chain([path.pieces[st.gadget_piece].order.clone()])
                .collect();
            let (swapper_pieces, gadget_piece, q_order) = {
                let st = &path.stations[sidx];
                (st.swapper_pieces.clone(), st.gadget_piece, st.q_order.clone())
            };
            for (&p, order) in swapper_pieces.iter().zip(orders) {
                path.pieces[p].order = order;
            }
            path.pieces[gadget_piece].order = q_order;
            path.stations[sidx].absorbed = Some(block.clone());
            if assign_blocks(h, path, rest) {
                return true;
            }
            for (&p, order) in swapper_pieces.iter().zip(&saved[..block.len()]) {
                path.pieces[p].order = order.clone();
            }
            path.pieces[gadget_piece].order = saved[block.len()].clone();
            path.stations[sidx].absorbed = None;
        }
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Hamilton { order: Vec<u32>, edges: usize },
    Failed { stage: Stage, detail: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub n: usize,
    pub k: usize,
    pub ell: usize,
    pub seed: u64,
    pub reservoir_size: usize,
    pub stations: usize,
    pub absorbing_path_len: usize,
    pub descriptor: Option<AbsorbDescriptor>,
    pub cover_paths: usize,
    pub covered: usize,
    pub cover_leftover: usize,
    pub connections: usize,
    pub absorbed_leftover: usize,
    pub outcome: Outcome,
}

/// Runs the five stages on a seeded copy of `params`. Input-shape
/// problems are hard errors; stage obstructions come back as a report
/// whose outcome names the stage.
pub fn run_pipeline(
    h: &Hypergraph,
    ell: usize,
    params: &PipelineParams,
    seed: u64,
) -> Result<PipelineReport, PipelineError> {
    let k = h.k();
    let s = k - ell;
    if ell == 0 || 2 * ell >= k {
        return Err(PipelineError::WideOverlap { k, ell });
    }
    if h.n() % s != 0 {
        return Err(PipelineError::Divisibility { n: h.n(), stride: s });
    }
    let mut params = params.clone();
    params.seed = seed;
    let mut report = PipelineReport {
        n: h.n(),
        k,
        ell,
        seed,
        reservoir_size: 0,
        stations: 0,
        absorbing_path_len: 0,
        descriptor: None,
        cover_paths: 0,
        covered: 0,
        cover_leftover: 0,
        connections: 0,
        absorbed_leftover: 0,
        outcome: Outcome::Failed { stage: Stage::Reservoir, detail: String::new() },
    };
    let fail = |mut report: PipelineReport, e: PipelineError| {
        report.outcome = Outcome::Failed { stage: e.stage(), detail: e.to_string() };
        Ok(report)
    };

    // reservoir
    let r_size = (params.reservoir_fraction.clone() * BigInt::from(h.n()))
        .floor()
        .to_integer()
        .to_usize()
        .expect("reservoir fraction in [0, 1]");
    let reservoir = VertexSet::from_members(
        SplitMix64::new(seed)
            .fork("reservoir")
            .sample_indices(h.n(), r_size.min(h.n()))
            .into_iter()
            .map(|i| i as u32),
    );
    report.reservoir_size = reservoir.len();

    // absorbing path
    let mut absorbing = match build_absorbing_path(h, ell, &params, &reservoir) {
        Ok(p) => p,
        Err(e) => return fail(report, e),
    };
    report.stations = absorbing.stations.len();
    report.absorbing_path_len = absorbing.order().len();
    report.descriptor = Some(absorbing.descriptor.clone());

    // cover
    let avoid = reservoir.union(&absorbing.vertex_set());
    let (cover, uncovered) = path_cover(h, ell, &avoid);
    report.cover_paths = cover.len();
    report.covered = cover.iter().map(|p| p.order.len()).sum();
    report.cover_leftover = uncovered.len();

    // connect cyclically: the absorbing path (if any) then every cover
    // path, with connector interiors drawn from the reservoir only
    let mut labels: Vec<String> = Vec::new();
    let mut ends: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    if !absorbing.is_empty() {
        let order = absorbing.order();
        labels.push("absorbing path".into());
        ends.push((order[..ell].to_vec(), order[order.len() - ell..].to_vec()));
    }
    for (i, p) in cover.iter().enumerate() {
        labels.push(format!("cover path {i}"));
        ends.push((p.begin().to_vec(), p.end().to_vec()));
    }
    if ends.is_empty() {
        return fail(report, PipelineError::EmptyAssembly);
    }
    // everything already placed or set aside is off limits, which
    // leaves exactly the unused reservoir for connector interiors
    let mut forbidden = absorbing.vertex_set().union(&uncovered);
    for p in &cover {
        forbidden = forbidden.union(&p.vertex_set());
    }
    let mut interiors: Vec<Vec<u32>> = Vec::new();
    for i in 0..ends.len() {
        let j = (i + 1) % ends.len();
        let conn = match connect(h, &ends[i].1, &ends[j].0, &forbidden, params.connect_len) {
            Ok(Some(c)) => c,
            Ok(None) | Err(_) => {
                return fail(
                    report,
                    PipelineError::Connection { from: labels[i].clone(), to: labels[j].clone() },
                )
            }
        };
        let interior = conn.order[ell..conn.order.len() - ell].to_vec();
        for &v in &interior {
            forbidden.insert(v);
        }
        interiors.push(interior);
        report.connections += 1;
    }

    // absorb what the cycle missed
    let mut in_cycle = absorbing.vertex_set();
    for p in &cover {
        in_cycle = in_cycle.union(&p.vertex_set());
    }
    for interior in &interiors {
        for &v in interior {
            in_cycle.insert(v);
        }
    }
    let leftover =
        VertexSet::from_members((0..h.n() as u32).filter(|&v| !in_cycle.contains(v)));
    report.absorbed_leftover = leftover.len();
    assert!(
        leftover.len() % s == 0,
        "cycle length is a multiple of k-l, so the leftover must be too"
    );
    if !leftover.is_empty() {
        if let Err(e) = absorb_leftover(h, &mut absorbing, &leftover, params.hop_budget) {
            return fail(report, e);
        }
    }

    // materialize and revalidate
    let mut order = Vec::with_capacity(h.n());
    let mut cover_iter = cover.iter();
    if !absorbing.is_empty() {
        order.extend(absorbing.order());
    } else if let Some(first) = cover_iter.next() {
        order.extend(first.order.iter());
    }
    let mut k_interiors = interiors.into_iter();
    if let Some(first) = k_interiors.next() {
        order.extend(first);
    }
    for p in cover_iter {
        order.extend(p.order.iter());
        order.extend(k_interiors.next().expect("one connector per piece"));
    }
    let cycle = match EllCycle::new(k, ell, order) {
        Ok(c) => c,
        Err(e) => {
            report.outcome =
                Outcome::Failed { stage: Stage::Absorb, detail: format!("assembly broke: {e}") };
            return Ok(report);
        }
    };
    if !cycle.is_hamilton(h) {
        report.outcome = Outcome::Failed {
            stage: Stage::Absorb,
            detail: "assembled cycle failed revalidation".into(),
        };
        return Ok(report);
    }
    report.outcome = Outcome::Hamilton { edges: cycle.order.len() / s, order: cycle.order };
    Ok(report)
}
