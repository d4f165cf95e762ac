//! Deterministic discrete-event simulator of the distributed grid domination
//! protocol and its k-distance variant.
//!
//! One agent activates per epoch. The first agent to activate settles in
//! place and seeds the cluster; later agents travel to the nearest valid slot
//! of the nearest slot-bearing settled agent, joining the cluster when the
//! module connection condition holds and occupying an orphan otherwise.
//! All tie-breaks are lexicographic by `(x, y)` then agent id, so identical
//! configurations replay byte-identically.

use crate::diagonal::Orientation;
use crate::error::{Error, Result};
use crate::grid::{manhattan_distance, GridSpec, Vertex, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    Sleep,
    Active,
    Settled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SettledKind {
    Cluster,
    Orphan,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Agent {
    pub id: usize,
    pub mode: Mode,
    pub done: bool,
    pub pos: Vertex,
    pub settled_kind: Option<SettledKind>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Placement {
    Random(u64),
    Explicit(Vec<Vertex>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Activation {
    Random(u64),
    Fixed(Vec<usize>),
}

#[derive(Debug, Clone)]
pub struct SimConfig {
    pub grid: GridSpec,
    pub k: u32,
    pub agent_count: usize,
    pub placement: Placement,
    pub activation: Activation,
    pub max_epochs: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct SimState {
    pub config: SimConfig,
    pub agents: Vec<Agent>,
    /// Non-orphan settled positions; a connected diagonal pattern.
    pub cluster: VertexSet,
    /// Occupied orphan vertices.
    pub orphan_occupied: VertexSet,
    /// Ids of settled agents, in settlement order.
    pub settled: Vec<usize>,
    pub epoch: u64,
    pub move_steps: u64,
    pub halted: bool,
    activated: Vec<bool>,
    rng: ChaCha8Rng,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SimEventKind {
    Activated,
    NoSettledFound,
    SettledFirst,
    Moved,
    SettledCluster,
    SettledOrphan,
    VslotsUpdated,
    WentToSleep,
    Halted,
    LeftGrid,
}

/// One trace record. Serializes to the JSON-lines schema
/// `{"epoch":int,"kind":string,"agent":int,"pos":[x,y]?,"path_len":int?,"detail":object?}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimEvent {
    pub epoch: u64,
    pub kind: SimEventKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agent: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pos: Option<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path_len: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub final_state: SimState,
    pub events: Vec<SimEvent>,
    pub dominated: bool,
    pub settled_count: usize,
}

/// Module connection condition: the centers differ by one of
/// `(+k,+k+1), (+k+1,-k), (-k,-k-1), (-k-1,+k)`. Symmetric in its arguments.
pub fn module_connectable(c1: Vertex, c2: Vertex, k: u32) -> bool {
    let k = k as i32;
    let d = (c2.x - c1.x, c2.y - c1.y);
    [(k, k + 1), (k + 1, -k), (-k, -k - 1), (-k - 1, k)].contains(&d)
}

fn connection_offsets(k: u32) -> [(i32, i32); 4] {
    let k = k as i32;
    [(k, k + 1), (k + 1, -k), (-k, -k - 1), (-k - 1, k)]
}

/// Whether a vertex (grid coordinates, possibly outside the grid) lies in the
/// k-super-grid.
fn in_super_grid(g: GridSpec, k: u32, u: Vertex) -> bool {
    let k = k as i32;
    u.x >= 1 - k && u.x <= g.m as i32 + k && u.y >= 1 - k && u.y <= g.n as i32 + k
}

/// Slots of a cluster-settled agent in grid coordinates: connection offsets
/// from its position, inside the super-grid and not already cluster centers.
fn slots_grid_coords(state: &SimState, agent: &Agent) -> Result<Vec<Vertex>> {
    if agent.settled_kind != Some(SettledKind::Cluster) {
        return Err(Error::NotClusterSettled(agent.id));
    }
    let (g, k) = (state.config.grid, state.config.k);
    Ok(connection_offsets(k)
        .iter()
        .map(|&(dx, dy)| Vertex::new(agent.pos.x + dx, agent.pos.y + dy))
        .filter(|&s| in_super_grid(g, k, s) && !state.cluster.contains(&s))
        .collect())
}

/// Slots of a cluster-settled agent, expressed in super-grid coordinates
/// (shifted by k on each axis).
pub fn slots_of(state: &SimState, agent: &Agent) -> Result<VertexSet> {
    let k = state.config.k as i32;
    Ok(slots_grid_coords(state, agent)?
        .into_iter()
        .map(|s| Vertex::new(s.x + k, s.y + k))
        .collect())
}

/// The orphan of an out-of-grid slot: the in-grid vertex at minimal distance
/// at most k sharing an x or y coordinate with it, ties lexicographic. For
/// k = 1 this is the slot's unique in-grid neighbour.
fn orphan_of_slot(g: GridSpec, k: u32, slot: Vertex) -> Option<Vertex> {
    let ki = k as i32;
    let mut best: Option<(u32, Vertex)> = None;
    for dx in -ki..=ki {
        let rem = ki - dx.abs();
        for dy in -rem..=rem {
            if dx != 0 && dy != 0 {
                continue;
            }
            let cand = Vertex::new(slot.x + dx, slot.y + dy);
            if !g.contains(cand) {
                continue;
            }
            let d = manhattan_distance(slot, cand);
            if d == 0 {
                continue;
            }
            match best {
                Some((bd, bv)) if (d, cand) >= (bd, bv) => {}
                _ => best = Some((d, cand)),
            }
        }
    }
    best.map(|(_, u)| u)
}

/// In-grid valid slots of a cluster-settled agent: in-grid slots plus the
/// orphans of out-of-grid slots, minus vertices already occupied.
pub fn valid_slots_of(state: &SimState, agent: &Agent) -> Result<VertexSet> {
    let (g, k) = (state.config.grid, state.config.k);
    let mut out = VertexSet::new();
    for s in slots_grid_coords(state, agent)? {
        let target = if g.contains(s) { Some(s) } else { orphan_of_slot(g, k, s) };
        if let Some(t) = target {
            if !state.cluster.contains(&t) && !state.orphan_occupied.contains(&t) {
                out.insert(t);
            }
        }
    }
    Ok(out)
}

/// Build the initial state: all agents asleep, empty cluster and orphan set.
pub fn init_sim(cfg: SimConfig) -> Result<SimState> {
    let g = cfg.grid;
    if cfg.agent_count == 0 {
        return Err(Error::InvalidPlacement("agent count must be positive".into()));
    }
    let positions: Vec<Vertex> = match &cfg.placement {
        Placement::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..cfg.agent_count)
                .map(|_| {
                    Vertex::new(rng.gen_range(1..=g.m as i32), rng.gen_range(1..=g.n as i32))
                })
                .collect()
        }
        Placement::Explicit(list) => {
            if list.len() != cfg.agent_count {
                return Err(Error::InvalidPlacement(format!(
                    "expected {} positions, got {}",
                    cfg.agent_count,
                    list.len()
                )));
            }
            for &p in list {
                if !g.contains(p) {
                    return Err(Error::InvalidPlacement(format!(
                        "({},{}) is outside the grid",
                        p.x, p.y
                    )));
                }
            }
            list.clone()
        }
    };
    if let Activation::Fixed(order) = &cfg.activation {
        let mut seen = vec![false; cfg.agent_count];
        for &id in order {
            if id >= cfg.agent_count || seen[id] {
                return Err(Error::InvalidActivation(format!(
                    "order must be a permutation prefix of agent ids, bad entry {id}"
                )));
            }
            seen[id] = true;
        }
    }
    let activation_rng = match &cfg.activation {
        Activation::Random(seed) => ChaCha8Rng::seed_from_u64(*seed),
        Activation::Fixed(_) => ChaCha8Rng::seed_from_u64(0),
    };
    let agents = positions
        .into_iter()
        .enumerate()
        .map(|(id, pos)| Agent { id, mode: Mode::Sleep, done: false, pos, settled_kind: None })
        .collect();
    let agent_count = cfg.agent_count;
    Ok(SimState {
        config: cfg,
        agents,
        cluster: VertexSet::new(),
        orphan_occupied: VertexSet::new(),
        settled: Vec::new(),
        epoch: 0,
        move_steps: 0,
        halted: false,
        activated: vec![false; agent_count],
        rng: activation_rng,
    })
}

impl SimState {
    fn next_agent(&mut self) -> Option<usize> {
        let pending: Vec<usize> =
            (0..self.config.agent_count).filter(|&i| !self.activated[i]).collect();
        if pending.is_empty() {
            return None;
        }
        match &self.config.activation {
            Activation::Fixed(order) => order.iter().copied().find(|&i| !self.activated[i]),
            Activation::Random(_) => {
                let idx = self.rng.gen_range(0..pending.len());
                Some(pending[idx])
            }
        }
    }

    fn awake_cluster_ids(&self) -> Vec<usize> {
        self.settled
            .iter()
            .copied()
            .filter(|&i| {
                self.agents[i].settled_kind == Some(SettledKind::Cluster) && !self.agents[i].done
            })
            .collect()
    }

    /// Put every slotless awake cluster agent to sleep.
    fn refresh_and_sleep(&mut self, events: &mut Vec<SimEvent>) {
        for id in self.awake_cluster_ids() {
            let vslots = valid_slots_of(self, &self.agents[id]).expect("cluster agent");
            if vslots.is_empty() {
                self.agents[id].done = true;
                self.agents[id].mode = Mode::Sleep;
                events.push(self.event(SimEventKind::WentToSleep, Some(id), None, None, None));
            }
        }
    }

    fn event(
        &self,
        kind: SimEventKind,
        agent: Option<usize>,
        pos: Option<Vertex>,
        path_len: Option<u64>,
        detail: Option<serde_json::Value>,
    ) -> SimEvent {
        SimEvent { epoch: self.epoch, kind, agent, pos, path_len, detail }
    }

    /// Residue that every cluster vertex satisfies (set by the seed agent).
    pub fn cluster_residue(&self) -> Option<u32> {
        self.cluster
            .iter()
            .next()
            .map(|&seed| crate::diagonal::residue(seed, self.config.k, Orientation::Xy))
    }
}

/// Advance one epoch: activate the next sleeping agent and run its part of
/// the protocol. Returns the events of the epoch; an empty return means no
/// agent was left to activate.
pub fn step_epoch(state: &mut SimState) -> Vec<SimEvent> {
    let mut events = Vec::new();
    if state.halted {
        return events;
    }
    if state.config.max_epochs.is_some_and(|cap| state.epoch >= cap) {
        state.halted = true;
        let ev = state.event(
            SimEventKind::Halted,
            None,
            None,
            None,
            Some(serde_json::json!({"anomaly": "max_epochs reached"})),
        );
        events.push(ev);
        return events;
    }
    // saturation check precedes activation: once no settled agent offers a
    // valid slot, the protocol is over and agents still asleep leave as-is
    if !state.settled.is_empty() {
        let any_slots = state
            .awake_cluster_ids()
            .iter()
            .any(|&hid| !valid_slots_of(state, &state.agents[hid]).unwrap().is_empty());
        if !any_slots {
            state.halted = true;
            events.push(state.event(SimEventKind::Halted, None, None, None, None));
            for id in 0..state.config.agent_count {
                if !state.activated[id] {
                    events.push(state.event(SimEventKind::LeftGrid, Some(id), None, None, None));
                }
            }
            return events;
        }
    }
    let Some(id) = state.next_agent() else {
        state.halted = true;
        events.push(state.event(SimEventKind::Halted, None, None, None, None));
        return events;
    };

    state.epoch += 1;
    state.activated[id] = true;
    state.agents[id].mode = Mode::Active;
    let pos = state.agents[id].pos;
    events.push(state.event(SimEventKind::Activated, Some(id), Some(pos), None, None));

    if state.settled.is_empty() {
        // first activation: settle in place as the cluster seed
        events.push(state.event(SimEventKind::NoSettledFound, Some(id), None, None, None));
        state.agents[id].mode = Mode::Settled;
        state.agents[id].settled_kind = Some(SettledKind::Cluster);
        state.cluster.insert(pos);
        state.settled.push(id);
        events.push(state.event(SimEventKind::SettledFirst, Some(id), Some(pos), None, None));
        let count = valid_slots_of(state, &state.agents[id]).unwrap().len();
        events.push(state.event(
            SimEventKind::VslotsUpdated,
            Some(id),
            None,
            None,
            Some(serde_json::json!({"count": count})),
        ));
        state.refresh_and_sleep(&mut events);
        return events;
    }

    // nearest settled cluster agent that still has valid slots
    let host = state
        .awake_cluster_ids()
        .into_iter()
        .filter_map(|hid| {
            let vs = valid_slots_of(state, &state.agents[hid]).expect("cluster agent");
            (!vs.is_empty()).then_some((hid, vs))
        })
        .min_by_key(|(hid, _)| {
            (manhattan_distance(state.agents[*hid].pos, pos), state.agents[*hid].pos, *hid)
        });

    // the saturation check above guarantees a host exists
    let (host_id, vslots) = host.expect("some settled agent offers a slot");

    let host_pos = state.agents[host_id].pos;
    let target = *vslots
        .iter()
        .min_by_key(|&&s| (manhattan_distance(s, pos), s))
        .expect("host has a nonempty slot set");
    // x-then-y shortest path; only its length matters to the trace
    let path_len = manhattan_distance(pos, target) as u64;
    state.move_steps += path_len;
    state.agents[id].pos = target;
    state.agents[id].mode = Mode::Settled;
    state.settled.push(id);
    events.push(state.event(SimEventKind::Moved, Some(id), Some(target), Some(path_len), None));

    if module_connectable(host_pos, target, state.config.k) {
        state.agents[id].settled_kind = Some(SettledKind::Cluster);
        state.cluster.insert(target);
        events.push(state.event(SimEventKind::SettledCluster, Some(id), Some(target), None, None));
        let count = valid_slots_of(state, &state.agents[id]).unwrap().len();
        events.push(state.event(
            SimEventKind::VslotsUpdated,
            Some(id),
            None,
            None,
            Some(serde_json::json!({"count": count})),
        ));
    } else {
        state.agents[id].settled_kind = Some(SettledKind::Orphan);
        state.orphan_occupied.insert(target);
        state.agents[id].done = true;
        state.agents[id].mode = Mode::Sleep;
        events.push(state.event(SimEventKind::SettledOrphan, Some(id), Some(target), None, None));
        events.push(state.event(SimEventKind::WentToSleep, Some(id), None, None, None));
    }
    state.refresh_and_sleep(&mut events);
    events
}

/// Run the protocol to halt or agent exhaustion and report the outcome.
pub fn run(cfg: SimConfig) -> Result<RunOutcome> {
    let grid = cfg.grid;
    let k = cfg.k;
    let mut state = init_sim(cfg)?;
    let mut events = Vec::new();
    while !state.halted {
        let evs = step_epoch(&mut state);
        if evs.is_empty() {
            break;
        }
        events.extend(evs);
    }
    let occupied: VertexSet = state.cluster.union(&state.orphan_occupied).copied().collect();
    let dominated = crate::constructor::verify_k_domination(grid, &occupied, k)?.dominated;
    let settled_count = state.settled.len();
    Ok(RunOutcome { final_state: state, events, dominated, settled_count })
}

/// Serialize a trace as JSON lines, one event per line.
pub fn trace_to_jsonl(events: &[SimEvent]) -> String {
    let mut out = String::new();
    for ev in events {
        out.push_str(&serde_json::to_string(ev).expect("events serialize"));
        out.push('\n');
    }
    out
}
