use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::RealizeError;
use crate::arrangement::{containing_slab, extract_description, is_simple, LineArrangement, Slab};
use crate::geometry::{
    int, line_intersection, rat, rotate, Line, Point, Rational, RationalRotation, Segment, Turn, Vector,
};
use crate::serde_rational;
use crate::transmission::{Instance, VertexLabel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SegmentParameters {
    /// Length factor of every `A{i,k}` along its direction vector.
    #[serde(with = "serde_rational")]
    pub a_length: Rational,
    /// Rotation applied to `(1, m_i)` to get the direction of `A{i,k}`.
    pub a_direction_tilt: RationalRotation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentRealization {
    pub instance: Instance,
    pub slab: Slab,
    pub parameters: SegmentParameters,
}

fn tilt_for(lines: &[Line]) -> RationalRotation {
    let dirs: Vec<Vector> = lines.iter().map(Line::direction).collect();
    (1..)
        .map(|j: i64| RationalRotation::from_parameter(&rat(j, j + 4)))
        .find(|r| {
            dirs.iter().all(|u| {
                let w = rotate(u, r, Turn::Ccw);
                dirs.iter().all(|v| !w.cross(v).is_zero())
            })
        })
        .expect("finitely many directions are excluded")
}

/// Smallest positive `λ` with `p + λ·w` on a line of `lines`.
fn first_hit(p: &Point, w: &Vector, lines: &[Line]) -> Option<Rational> {
    lines
        .iter()
        .filter_map(|l| {
            let den = &l.a * &w.x + &l.b * &w.y;
            if den.is_zero() {
                return None;
            }
            let lam = (&l.c - &l.a * &p.x - &l.b * &p.y) / den;
            lam.is_positive().then_some(lam)
        })
        .min()
}

/// Builds `C(i)`, `A{i,k}` and `B(i,k)` segments whose transmission graph is
/// the segment reduction of the arrangement's description.
///
/// `C(i)` spans line `i` across the slab. `A{i,k}` starts at the crossing of
/// lines `i` and `k` and leaves in a direction parallel to no line, short
/// enough to miss every other line. `B(i, o_p)` has its distinguished point
/// halfway between the `p`-th and next crossing on line `i` (or the right
/// wall) and reaches back past the left wall.
pub fn realize_segments(l: &LineArrangement) -> Result<SegmentRealization, RealizeError> {
    let slab = containing_slab(l)?;
    if !is_simple(l) {
        return Err(RealizeError::NonSimpleArrangement);
    }
    let lines = l.lines();
    let n = lines.len();
    let desc = extract_description(l);
    let tilt = tilt_for(lines);

    let mut a_entries = Vec::new();
    let mut lambda = Rational::one();
    for i in 0..n {
        for k in i + 1..n {
            let p = line_intersection(&lines[i], &lines[k])?;
            let w = rotate(&lines[i].direction(), &tilt, Turn::Ccw);
            if let Some(hit) = first_hit(&p, &w, lines) {
                lambda = lambda.min(hit / int(2));
            }
            a_entries.push((i + 1, k + 1, p, w));
        }
    }

    let mut inst = Instance::new();
    let far_left = &slab.x_left - Rational::one();
    for (i, line) in lines.iter().enumerate() {
        let c = Segment::new(slab.left_point(line), slab.right_point(line))?;
        inst.push(VertexLabel::C(i + 1), c);
    }
    for (i, k, p, w) in a_entries {
        let q = &p + &w.scale(&lambda);
        inst.push(VertexLabel::a(i, k), Segment::new(p, q)?);
    }
    for (i, line) in lines.iter().enumerate() {
        let order = desc.simple_order(i + 1).expect("simple arrangement");
        let xs: Vec<Rational> = order
            .iter()
            .map(|&k| line_intersection(line, &lines[k - 1]).map(|p| p.x))
            .collect::<Result<_, _>>()?;
        for (pos, &k) in order.iter().enumerate() {
            let next = xs.get(pos + 1).unwrap_or(&slab.x_right);
            let mid = (&xs[pos] + next) / int(2);
            let seg = Segment::new(line.point_at(&mid), line.point_at(&far_left))?;
            inst.push(VertexLabel::B(i + 1, k), seg);
        }
    }

    Ok(SegmentRealization {
        instance: inst,
        slab,
        parameters: SegmentParameters {
            a_length: lambda,
            a_direction_tilt: tilt,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::arrangement_from_slopes;
    use crate::reduce::{reduce_segments, segment_vertex_count};
    use crate::transmission::{graph_diff, transmission_graph};

    #[test]
    fn triangle_round_trip() {
        let l = arrangement_from_slopes(&[(-1, 0), (0, 1), (1, 0)]).unwrap();
        let r = realize_segments(&l).unwrap();
        assert_eq!(r.instance.len(), segment_vertex_count(3));
        let g = transmission_graph(&r.instance);
        let h = reduce_segments(&extract_description(&l)).unwrap();
        assert!(graph_diff(&g, &h).is_empty(), "{}", graph_diff(&g, &h));
    }

    #[test]
    fn non_simple_rejected() {
        let l = arrangement_from_slopes(&[(-1, 0), (0, 0), (1, 0)]).unwrap();
        assert_eq!(realize_segments(&l), Err(RealizeError::NonSimpleArrangement));
    }

    #[test]
    fn single_line_rejected() {
        let l = arrangement_from_slopes(&[(1, 0)]).unwrap();
        assert!(matches!(realize_segments(&l), Err(RealizeError::Arrangement(_))));
    }
}
