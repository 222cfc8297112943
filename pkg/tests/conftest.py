"""Shared fixtures: small logic instances and an input-file writer."""
import pytest

from bcm.logics.goedel import GoedelSystem
from bcm.logics.horn import HornSystem
from bcm.logics.prop import ATOMS_FALSUM, ATOMS_ONLY, FragmentSpec, PropSystem
from bcm.logics.threeval import ThreeValuedSystem


@pytest.fixture
def prop2():
    return PropSystem(["a", "b"])


@pytest.fixture
def prop_t():
    return PropSystem(["a", "b"], ATOMS_ONLY)


@pytest.fixture
def prop_p():
    return PropSystem(["a", "b"], ATOMS_FALSUM)


@pytest.fixture
def prop_t1():
    return PropSystem(["a", "b"], FragmentSpec(kind="atoms", single_formula=True))


@pytest.fixture
def prop_p1():
    return PropSystem(["a", "b"], FragmentSpec(kind="atoms-falsum", single_formula=True))


@pytest.fixture
def horn2():
    return HornSystem(["a", "b"])


@pytest.fixture
def k3():
    return ThreeValuedSystem(["a"], "k3")


@pytest.fixture
def p3():
    return ThreeValuedSystem(["a"], "p3")


@pytest.fixture
def goedel1():
    return GoedelSystem(["a"], theta=0.5, excluded_middle=False)


@pytest.fixture
def write_file(tmp_path):
    """Write text to a fresh file under tmp_path and return its path as a string."""
    counter = {"n": 0}

    def write(text: str, suffix: str = ".txt") -> str:
        counter["n"] += 1
        path = tmp_path / f"input{counter['n']}{suffix}"
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write
