//! Neighborhood-graph components and the scooping cover inside each one.

use crate::geometry::Point;

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

/// A connected component of the neighborhood graph, as ascending indices
/// into the point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub member_indices: Vec<usize>,
}

/// Components of the graph joining every pair at distance `<= threshold`.
/// Components are ordered by their smallest member.
pub fn connected_components(points: &[Point], threshold: f64) -> Vec<Component> {
    let n = points.len();
    let mut dsu = DisjointSet::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if points[i].dist(&points[j]) <= threshold {
                dsu.union(i, j);
            }
        }
    }
    let mut slot_of_root = vec![usize::MAX; n];
    let mut components: Vec<Component> = Vec::new();
    for i in 0..n {
        let root = dsu.find(i);
        if slot_of_root[root] == usize::MAX {
            slot_of_root[root] = components.len();
            components.push(Component {
                member_indices: Vec::new(),
            });
        }
        components[slot_of_root[root]].member_indices.push(i);
    }
    components
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScoopResult {
    pub centers: Vec<Point>,
    pub center_indices: Vec<usize>,
    pub count: usize,
}

/// Greedily picks members pairwise more than `2R` apart until every member
/// is within `2R` of a pick. Always takes the lowest-index uncovered member.
pub fn scoop(component: &Component, points: &[Point], r: f64) -> ScoopResult {
    let reach = 2.0 * r;
    let mut chosen: Vec<usize> = Vec::new();
    // nearest chosen distance per member, refreshed as picks are added
    let mut nearest = vec![f64::INFINITY; component.member_indices.len()];
    loop {
        let next = component
            .member_indices
            .iter()
            .enumerate()
            .find(|&(slot, _)| nearest[slot] > reach)
            .map(|(_, &idx)| idx);
        let Some(idx) = next else { break };
        chosen.push(idx);
        for (slot, &m) in component.member_indices.iter().enumerate() {
            nearest[slot] = nearest[slot].min(points[m].dist(&points[idx]));
        }
    }
    ScoopResult {
        centers: chosen.iter().map(|&i| points[i].clone()).collect(),
        count: chosen.len(),
        center_indices: chosen,
    }
}
