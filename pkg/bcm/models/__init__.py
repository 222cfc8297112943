"""Domain types."""
from bcm.models.catalog import Base, Catalog
from bcm.models.interval import Interval, IntervalTarget, Surd
from bcm.models.kripke import ExplicitModelSet, IntensionalModels, PointedKripke
from bcm.models.model_set import ModelSet
from bcm.models.reports import (
    ChangeReport,
    CombinationEvidence,
    CompatVerdict,
    EvictionReport,
    MonotonyWitness,
    NeighborReport,
    PostulateCase,
    PostulateReport,
    PostulateStatus,
    ReceptionReport,
    RmbpVerdict,
    UniquenessReport,
)
from bcm.models.run_config import RunConfig
from bcm.models.selection import SelectionPolicy

__all__ = [
    "Base",
    "Catalog",
    "ChangeReport",
    "CombinationEvidence",
    "CompatVerdict",
    "EvictionReport",
    "ExplicitModelSet",
    "IntensionalModels",
    "Interval",
    "IntervalTarget",
    "ModelSet",
    "MonotonyWitness",
    "NeighborReport",
    "PointedKripke",
    "PostulateCase",
    "PostulateReport",
    "PostulateStatus",
    "ReceptionReport",
    "RmbpVerdict",
    "RunConfig",
    "SelectionPolicy",
    "Surd",
    "UniquenessReport",
]
