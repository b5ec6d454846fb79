use super::{Boundary, Diagram, DiagramError, Rot, Orient, Sign, Slice, Strand};

impl Diagram {
    /// Flips the orientation of one component.
    ///
    /// Cups and caps of that component change rotation; crossings between it and a
    /// different component change sign. The result is not normalized, so
    /// reversing twice gives back the original word.
    pub fn reverse_component(&self, label: &str) -> Result<Diagram, DiagramError> {
        let k = self.component_index(label)?;
        let levels = self.levels();
        let slices = self
            .slices
            .iter()
            .zip(&levels)
            .map(|(s, level)| match *s {
                Slice::Cup { pos, rot, comp } if comp == k => Slice::Cup { pos, rot: rot.flip(), comp },
                Slice::Cap { pos, rot } if level[pos].comp == k => Slice::Cap { pos, rot: rot.flip() },
                Slice::Cross { pos, sign } => {
                    let (a, b) = (level[pos].comp, level[pos + 1].comp);
                    if (a == k) != (b == k) {
                        Slice::Cross { pos, sign: sign.flip() }
                    } else {
                        Slice::Cross { pos, sign }
                    }
                }
                other => other,
            })
            .collect();
        let boundary = match self.boundary {
            Boundary::Tangle { comp, orient } if comp == k => Boundary::Tangle { comp, orient: orient.flip() },
            b => b,
        };
        Diagram::new(self.components.clone(), boundary, slices)
    }

    /// True when every crossing has both strands pointing up.
    pub fn is_normalized(&self) -> bool {
        self.slices.iter().zip(self.levels()).all(|(s, level)| match *s {
            Slice::Cross { pos, .. } => level[pos].orient == Orient::Up && level[pos + 1].orient == Orient::Up,
            _ => true,
        })
    }

    /// Rewrites every crossing that is not upward-upward by conjugating an
    /// upward crossing of the same sign with cups and caps.
    pub fn normalize_crossings(&self) -> Diagram {
        let levels = self.levels();
        let mut out = Vec::with_capacity(self.slices.len());
        for (s, level) in self.slices.iter().zip(&levels) {
            match *s {
                Slice::Cross { pos: p, sign } => {
                    let (a, b) = (level[p], level[p + 1]);
                    let x = |pos| Slice::Cross { pos, sign };
                    match (a.orient, b.orient) {
                        (Orient::Up, Orient::Up) => out.push(*s),
                        (Orient::Down, Orient::Up) => out.extend([
                            cup(p + 2, Rot::Cw, a.comp),
                            x(p + 1),
                            cap(p, Rot::Ccw),
                        ]),
                        (Orient::Up, Orient::Down) => out.extend([
                            cup(p, Rot::Ccw, b.comp),
                            x(p + 1),
                            cap(p + 2, Rot::Cw),
                        ]),
                        (Orient::Down, Orient::Down) => out.extend([
                            cup(p + 2, Rot::Cw, a.comp),
                            cup(p + 3, Rot::Cw, b.comp),
                            x(p + 2),
                            cap(p + 1, Rot::Ccw),
                            cap(p, Rot::Ccw),
                        ]),
                    }
                }
                other => out.push(other),
            }
        }
        Diagram::new(self.components.clone(), self.boundary, out).expect("rotation templates preserve validity")
    }

    /// Inserts local slices at `level` (between slices `level - 1` and `level`).
    pub fn insert_at(&self, level: usize, new: &[Slice]) -> Result<Diagram, DiagramError> {
        if level > self.slices.len() {
            return Err(DiagramError::Invalid(format!("level {level} out of range")));
        }
        let mut slices = self.slices[..level].to_vec();
        slices.extend_from_slice(new);
        slices.extend_from_slice(&self.slices[level..]);
        Diagram::new(self.components.clone(), self.boundary, slices)
    }

    fn strand_at(&self, level: usize, pos: usize) -> Result<Strand, DiagramError> {
        let levels = self.levels();
        levels
            .get(level)
            .and_then(|l| l.get(pos))
            .copied()
            .ok_or_else(|| DiagramError::Invalid(format!("no strand at level {level}, position {pos}")))
    }

    /// Adds a kink of the given sign on the strand at `(level, pos)`; this
    /// changes that component's framing by `sign`.
    pub fn insert_curl(&self, level: usize, pos: usize, sign: Sign) -> Result<Diagram, DiagramError> {
        let s = self.strand_at(level, pos)?;
        self.insert_at(level, &curl_slices(pos, s, sign))
    }

    /// Blow-up at the leftmost strand of `label` at `level`.
    pub fn blow_up(&self, label: &str, level: usize, sign: Sign, new_label: &str) -> Result<Diagram, DiagramError> {
        let k = self.component_index(label)?;
        let p = self
            .levels()
            .get(level)
            .and_then(|l| l.iter().position(|s| s.comp == k))
            .ok_or_else(|| DiagramError::Invalid(format!("component `{label}` has no strand at level {level}")))?;
        self.blow_up_at(level, p, sign, new_label)
    }

    /// Blow-up on the strand at `(level, pos)`.
    ///
    /// A new unknot `new_label` with framing `sign` encircles the strand with
    /// linking number `-sign`, and the strand gets a kink of sign `sign`, so
    /// blowing the circle down returns the original framing.
    pub fn blow_up_at(&self, level: usize, p: usize, sign: Sign, new_label: &str) -> Result<Diagram, DiagramError> {
        if self.components.iter().any(|c| c == new_label) {
            return Err(DiagramError::DuplicateComponent(new_label.to_string()));
        }
        let x = self.strand_at(level, p)?;
        let m = self.components.len();
        let o = x.orient;
        let mut new = vec![cup(p + 1, Rot::for_cup(o), m)];
        new.push(Slice::Cross { pos: p, sign: sign.flip() });
        new.push(Slice::Cross { pos: p, sign: sign.flip() });
        new.extend(curl_slices(p + 2, Strand { comp: m, orient: o.flip() }, sign));
        new.push(cap(p + 1, Rot::for_cap(o)));
        new.extend(curl_slices(p, x, sign));
        let mut components = self.components.clone();
        components.push(new_label.to_string());
        let mut slices = self.slices[..level].to_vec();
        slices.extend(new);
        slices.extend_from_slice(&self.slices[level..]);
        Diagram::new(components, self.boundary, slices)
    }

    /// Cuts a closed diagram open along `label` into a 1-1 tangle whose end
    /// strands belong to that component. The component must touch the left
    /// or right edge of the diagram at some level.
    pub fn cut_open(&self, label: &str) -> Result<Diagram, DiagramError> {
        if !self.is_closed() {
            return Err(DiagramError::Invalid("only closed diagrams can be cut".into()));
        }
        let k = self.component_index(label)?;
        let levels = self.levels();
        let left = levels.iter().position(|l| l.first().is_some_and(|s| s.comp == k));
        if let Some(h) = left {
            let o = levels[h][0].orient;
            let mut slices = vec![cup(1, Rot::for_cup(o.flip()), k)];
            slices.extend(self.slices[..h].iter().map(|s| s.shifted(2)));
            slices.push(cap(1, Rot::for_cap(o.flip())));
            slices.extend_from_slice(&self.slices[h..]);
            return Diagram::new(self.components.clone(), Boundary::Tangle { comp: k, orient: o }, slices);
        }
        let right = levels.iter().position(|l| l.last().is_some_and(|s| s.comp == k));
        if let Some(h) = right {
            let last = levels[h].len() - 1;
            let o = levels[h][last].orient;
            let mut slices = vec![cup(0, Rot::for_cup(o), k)];
            slices.extend(self.slices[..h].iter().map(|s| s.shifted(1)));
            slices.push(cap(last + 1, Rot::for_cap(o)));
            slices.extend(self.slices[h..].iter().map(|s| s.shifted(1)));
            return Diagram::new(self.components.clone(), Boundary::Tangle { comp: k, orient: o }, slices);
        }
        Err(DiagramError::Invalid(format!("component `{label}` never reaches the outer boundary")))
    }

    /// Components that can be cut open.
    pub fn outer_components(&self) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.levels().iter().flat_map(|l| l.first().into_iter().chain(l.last())).map(|s| s.comp).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Disjoint union, `other` drawn to the right of `self`. Labels must differ.
    pub fn disjoint_union(&self, other: &Diagram) -> Result<Diagram, DiagramError> {
        if !self.is_closed() || !other.is_closed() {
            return Err(DiagramError::Invalid("disjoint union needs closed diagrams".into()));
        }
        let offset = self.components.len();
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        let mut slices = self.slices.clone();
        slices.extend(other.slices.iter().map(|s| match *s {
            Slice::Cup { pos, rot, comp } => Slice::Cup { pos, rot, comp: comp + offset },
            s => s,
        }));
        Diagram::new(components, Boundary::Closed, slices)
    }

    /// Adds a blackboard-parallel copy of `label`, named `copy_label`, with
    /// the opposite orientation. The copy runs on the left of the direction
    /// of travel when `left` is set, otherwise on the right.
    pub fn pushoff(&self, label: &str, copy_label: &str, left: bool) -> Result<Diagram, DiagramError> {
        let k = self.component_index(label)?;
        if !self.is_closed() {
            return Err(DiagramError::Invalid("pushoff needs a closed diagram".into()));
        }
        if self.components.iter().any(|c| c == copy_label) {
            return Err(DiagramError::DuplicateComponent(copy_label.to_string()));
        }
        let kc = self.components.len();
        // Copy sits left of an upward strand iff `left`.
        let copy_first = |o: Orient| (o == Orient::Up) == left;
        let levels = self.levels();
        // Position of original index `i` once every strand of `k` is doubled.
        let at = |level: &[Strand], i: usize| i + level[..i].iter().filter(|s| s.comp == k).count();
        let mut out = Vec::new();
        for (s, level) in self.slices.iter().zip(&levels) {
            match *s {
                Slice::Cup { pos, rot, comp } if comp == k => {
                    let base = at(level, pos);
                    let (outer, inner) = if copy_first(rot.cup_legs().0) { (kc, k) } else { (k, kc) };
                    out.push(cup(base, rot, outer));
                    out.push(cup(base + 1, rot, inner));
                }
                Slice::Cup { pos, rot, comp } => out.push(cup(at(level, pos), rot, comp)),
                Slice::Cap { pos, rot } => {
                    let start = at(level, pos);
                    if level[pos].comp == k {
                        out.push(cap(start + 1, rot));
                    }
                    out.push(cap(start, rot));
                }
                Slice::Cross { pos, sign } => {
                    let start = at(level, pos);
                    let wa = if level[pos].comp == k { 2 } else { 1 };
                    let wb = if level[pos + 1].comp == k { 2 } else { 1 };
                    // Carry each strand of the right bundle across the left bundle.
                    for j in 0..wb {
                        for i in (0..wa).rev() {
                            out.push(Slice::Cross { pos: start + i + j, sign });
                        }
                    }
                }
            }
        }
        let mut components = self.components.clone();
        components.push(copy_label.to_string());
        let parallel = Diagram::new(components, Boundary::Closed, out)?;
        parallel.reverse_component(copy_label)
    }

    /// Oriented band sum of two adjacent antiparallel strands at
    /// `(level, pos)` and `(level, pos + 1)` belonging to different
    /// components; the result keeps the left strand's label.
    pub fn band_sum(&self, level: usize, pos: usize) -> Result<Diagram, DiagramError> {
        let a = self.strand_at(level, pos)?;
        let b = self.strand_at(level, pos + 1)?;
        if a.comp == b.comp || a.orient == b.orient {
            return Err(DiagramError::Invalid("band needs antiparallel strands of two components".into()));
        }
        let (keep, gone) = (a.comp, b.comp);
        let remap = |c: usize| {
            let c = if c == gone { keep } else { c };
            if c > gone {
                c - 1
            } else {
                c
            }
        };
        let mut slices: Vec<Slice> = self.slices[..level].to_vec();
        slices.push(cap(pos, Rot::for_cap(a.orient)));
        slices.push(cup(pos, Rot::for_cup(a.orient), keep));
        slices.extend_from_slice(&self.slices[level..]);
        let slices = slices
            .into_iter()
            .map(|s| match s {
                Slice::Cup { pos, rot, comp } => Slice::Cup { pos, rot, comp: remap(comp) },
                s => s,
            })
            .collect();
        let mut components = self.components.clone();
        components.remove(gone);
        let boundary = match self.boundary {
            Boundary::Tangle { comp, orient } => Boundary::Tangle { comp: remap(comp), orient },
            Boundary::Closed => Boundary::Closed,
        };
        Diagram::new(components, boundary, slices)
    }
}

fn cup(pos: usize, rot: Rot, comp: usize) -> Slice {
    Slice::Cup { pos, rot, comp }
}

fn cap(pos: usize, rot: Rot) -> Slice {
    Slice::Cap { pos, rot }
}

/// A kink on strand `s` at `pos`: a cup to its right, one crossing, a cap.
pub(crate) fn curl_slices(pos: usize, s: Strand, sign: Sign) -> Vec<Slice> {
    vec![
        cup(pos + 1, Rot::for_cup(s.orient), s.comp),
        Slice::Cross { pos, sign },
        cap(pos + 1, Rot::for_cap(s.orient)),
    ]
}
