use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::*;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Objects {
    Frames(Vec<LFrame>),
    Rects(Vec<Rect>),
}

/// A set of frames (or rectangles) plus the reference lines they relate to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeomInstance {
    pub model: Model,
    pub objects: Objects,
    pub diagonal: Option<Diagonal>,
    pub vertical: Option<i64>,
    pub horizontal: Option<i64>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("rectangles are only meaningful in the standard model")]
    RectsInEdgeModel,
    #[error("instance has no diagonal")]
    MissingDiagonal,
}

impl GeomInstance {
    pub fn frames(frames: Vec<LFrame>) -> Self {
        GeomInstance {
            model: Model::Standard,
            objects: Objects::Frames(frames),
            diagonal: None,
            vertical: None,
            horizontal: None,
        }
    }

    pub fn rects(rects: Vec<Rect>) -> Self {
        GeomInstance { objects: Objects::Rects(rects), ..GeomInstance::frames(Vec::new()) }
    }

    pub fn with_diagonal(mut self, d: i64) -> Self {
        self.diagonal = Some(Diagonal::new(d));
        self
    }

    pub fn with_model(mut self, model: Model) -> Self {
        self.model = model;
        self
    }

    pub fn len(&self) -> usize {
        match &self.objects {
            Objects::Frames(f) => f.len(),
            Objects::Rects(r) => r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ids(&self) -> Vec<String> {
        match &self.objects {
            Objects::Frames(f) => f.iter().map(|x| x.id.clone()).collect(),
            Objects::Rects(r) => r.iter().map(|x| x.id.clone()).collect(),
        }
    }

    /// The frames, or `None` for a rectangle instance.
    pub fn frame_list(&self) -> Option<&[LFrame]> {
        match &self.objects {
            Objects::Frames(f) => Some(f),
            Objects::Rects(_) => None,
        }
    }

    pub fn validate(&self) -> Result<(), InstanceError> {
        let mut seen = std::collections::HashSet::new();
        for id in self.ids() {
            if !seen.insert(id.clone()) {
                return Err(InstanceError::DuplicateId(id));
            }
        }
        match &self.objects {
            Objects::Frames(fs) => {
                for f in fs {
                    if f.hspan == 0 || f.vspan == 0 {
                        return Err(GeometryError::ZeroSpan(f.id.clone()).into());
                    }
                }
            }
            Objects::Rects(rs) => {
                if self.model == Model::Edge {
                    return Err(InstanceError::RectsInEdgeModel);
                }
                for r in rs {
                    if r.lo.x >= r.hi.x || r.lo.y >= r.hi.y {
                        return Err(GeometryError::DegenerateRect(r.id.clone()).into());
                    }
                }
            }
        }
        Ok(())
    }

    /// Replace every diagonal-anchored rectangle by its anchor L-frame.
    pub fn rects_to_frames(&self) -> Result<GeomInstance, InstanceError> {
        match &self.objects {
            Objects::Frames(_) => Ok(self.clone()),
            Objects::Rects(rs) => {
                let diag = self.diagonal.ok_or(InstanceError::MissingDiagonal)?;
                let frames = rs.iter().map(|r| rect_to_lframe(r, &diag)).collect::<Result<Vec<_>, _>>()?;
                Ok(GeomInstance { objects: Objects::Frames(frames), ..self.clone() })
            }
        }
    }

    /// Sub-instance on the given indices, in the given order.
    pub fn restrict(&self, keep: &[usize]) -> GeomInstance {
        let objects = match &self.objects {
            Objects::Frames(f) => Objects::Frames(keep.iter().map(|&i| f[i].clone()).collect()),
            Objects::Rects(r) => Objects::Rects(keep.iter().map(|&i| r[i].clone()).collect()),
        };
        GeomInstance { objects, ..self.clone() }
    }
}
