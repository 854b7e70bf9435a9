use serde::Serialize;

use super::Graph;

/// Shape of a biconnected block. A triangle is reported as [`BlockKind::Cycle`];
/// use [`Block::is_clique`] when a triangle should count as a clique.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BlockKind {
    Edge,
    Cycle,
    Clique,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    /// Sorted member vertices.
    pub vertices: Vec<usize>,
    pub edges: usize,
    pub kind: BlockKind,
}

impl Block {
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 3 && self.edges == self.vertices.len()
    }

    pub fn is_clique(&self) -> bool {
        let s = self.vertices.len();
        self.edges == s * (s - 1) / 2
    }
}

/// Maximal biconnected components together with the articulation points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockCutTree {
    pub blocks: Vec<Block>,
    /// Sorted cut vertices.
    pub cut_vertices: Vec<usize>,
    /// For each vertex, the indices of the blocks containing it.
    pub vertex_blocks: Vec<Vec<usize>>,
}

impl BlockCutTree {
    pub fn is_cactus(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.kind == BlockKind::Edge || b.is_cycle())
    }

    pub fn is_block_graph(&self) -> bool {
        self.blocks.iter().all(Block::is_clique)
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.vertex_blocks[v].len() >= 2
    }
}

/// Hopcroft–Tarjan block decomposition, iterative. Blocks are ordered by
/// their smallest vertex, then by size. Isolated vertices lie in no block.
pub fn block_cut_tree(g: &Graph) -> BlockCutTree {
    let n = g.n();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(usize, usize)>> = Vec::new();

    struct Frame {
        v: usize,
        parent: usize,
        next: usize,
    }

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut stack = vec![Frame {
            v: root,
            parent: UNSEEN,
            next: 0,
        }];
        while let Some(frame) = stack.last_mut() {
            let v = frame.v;
            if frame.next < g.degree(v) {
                let u = g.neighbors(v)[frame.next];
                frame.next += 1;
                if u == frame.parent {
                    continue;
                }
                if disc[u] == UNSEEN {
                    edge_stack.push((v, u));
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    stack.push(Frame {
                        v: u,
                        parent: v,
                        next: 0,
                    });
                } else if disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let Some(parent) = stack.last() {
                    let p = parent.v;
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        raw_blocks.push(block);
                    }
                }
            }
        }
    }

    let mut blocks: Vec<Block> = raw_blocks
        .into_iter()
        .map(|edges| {
            let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            vertices.sort_unstable();
            vertices.dedup();
            let s = vertices.len();
            let m = edges.len();
            let kind = if s == 2 {
                BlockKind::Edge
            } else if m == s {
                BlockKind::Cycle
            } else if m == s * (s - 1) / 2 {
                BlockKind::Clique
            } else {
                BlockKind::Other
            };
            Block {
                vertices,
                edges: m,
                kind,
            }
        })
        .collect();
    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));

    let mut vertex_blocks = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            vertex_blocks[v].push(i);
        }
    }
    let cut_vertices = (0..n).filter(|&v| vertex_blocks[v].len() >= 2).collect();
    BlockCutTree {
        blocks,
        cut_vertices,
        vertex_blocks,
    }
}
