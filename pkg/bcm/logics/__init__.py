"""Logic instances and the registry the command line dispatches on."""
from typing import Collection, Optional

from bcm.core.config import settings
from bcm.core.exceptions import PreconditionError
from bcm.logics.base import FiniteSatSystem, SatSystem, SymbolicSatSystem
from bcm.logics.goedel import GoedelSystem
from bcm.logics.horn import HornSystem
from bcm.logics.ltlx import LtlxSystem
from bcm.logics.prop import ATOMS_FALSUM, ATOMS_ONLY, FULL, FragmentSpec, PropSystem
from bcm.logics.qintervals import QIntervalSystem
from bcm.logics.threeval import ThreeValuedSystem

LOGIC_IDS = ("prop", "prop-t", "prop-p", "prop-t1", "prop-p1", "horn", "k3", "p3", "goedel", "ltlx", "qint")

_FRAGMENTS = {
    "prop": FULL,
    "prop-t": ATOMS_ONLY,
    "prop-p": ATOMS_FALSUM,
    "prop-t1": FragmentSpec(kind="atoms", single_formula=True),
    "prop-p1": FragmentSpec(kind="atoms-falsum", single_formula=True),
}


def build_system(logic: str, atoms: Collection[str] = (), theta: Optional[float] = None) -> SatSystem:
    """Instantiate a logic by its command-line identifier.

    Raises:
        PreconditionError: unknown logic, or a threshold given for a logic
            other than goedel
    """
    if theta is not None and logic != "goedel":
        raise PreconditionError("a threshold only applies to goedel")
    if logic in _FRAGMENTS:
        return PropSystem(atoms, _FRAGMENTS[logic])
    if logic == "horn":
        return HornSystem(atoms)
    if logic in ("k3", "p3"):
        return ThreeValuedSystem(atoms, logic)
    if logic == "goedel":
        return GoedelSystem(atoms, settings.DEFAULT_THETA if theta is None else theta)
    if logic == "ltlx":
        return LtlxSystem(atoms)
    if logic == "qint":
        return QIntervalSystem()
    raise PreconditionError(f"unknown logic {logic!r}; choose one of {', '.join(LOGIC_IDS)}")


__all__ = ["FiniteSatSystem", "LOGIC_IDS", "SatSystem", "SymbolicSatSystem", "build_system"]
