//! Search for min-cuts satisfying an arbitrary predicate inside the slice of
//! a regular one.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::capacity::Capacity;
use crate::cut::Cut;
use crate::enumeration::{collect_min_cuts_parallel, enumerate_min_cuts};
use crate::error::Result;
use crate::max_flow::Flow;
use crate::network::FlowNetwork;
use crate::predicates::{CutPredicate, LatticeLinear};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceResult {
    pub found: Option<Cut>,
    /// Slice members on which `general` was evaluated.
    pub examined: usize,
}

/// First min-cut in enumeration order that satisfies both `regular` and
/// `general`.
pub fn slice_search<C, R, G>(net: &FlowNetwork<C>, flow: &Flow<C>, regular: &R, general: &G) -> Result<SliceResult>
where
    C: Capacity,
    R: LatticeLinear + ?Sized,
    G: CutPredicate + ?Sized,
{
    let mut examined = 0;
    let e = enumerate_min_cuts(net, flow, regular, None, |cut| {
        examined += 1;
        if general.evaluate(cut) {
            ControlFlow::Break(cut.clone())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(SliceResult {
        found: e.break_value,
        examined,
    })
}

/// `(satisfying, examined)` over the whole slice of `regular`.
pub fn slice_count<C, R, G>(net: &FlowNetwork<C>, flow: &Flow<C>, regular: &R, general: &G) -> Result<(usize, usize)>
where
    C: Capacity,
    R: LatticeLinear + ?Sized,
    G: CutPredicate + ?Sized,
{
    let mut satisfying = 0;
    let e = enumerate_min_cuts(net, flow, regular, None, |cut| {
        satisfying += usize::from(general.evaluate(cut));
        ControlFlow::<()>::Continue(())
    })?;
    Ok((satisfying, e.listed))
}

/// Any satisfying cut, testing the slice on the rayon pool. Which cut is
/// returned when several qualify is not deterministic.
pub fn slice_search_any<C, R, G>(net: &FlowNetwork<C>, flow: &Flow<C>, regular: &R, general: &G) -> Result<Option<Cut>>
where
    C: Capacity,
    R: LatticeLinear + ?Sized,
    G: CutPredicate + ?Sized,
{
    let slice = collect_min_cuts_parallel(net, flow, regular)?;
    Ok(slice.into_par_iter().find_any(|c| general.evaluate(c)))
}
