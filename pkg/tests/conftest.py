from pathlib import Path

import pytest

from ftdesigns.perm import PermutationGroup, load_group

DATA = Path(__file__).resolve().parent.parent / "src" / "ftdesigns" / "data"


def fixture_group(name: str) -> PermutationGroup:
    return load_group(DATA / "fixtures" / f"{name}.json")


@pytest.fixture(scope="session")
def psl2_7() -> PermutationGroup:
    return fixture_group("psl2_7")


@pytest.fixture(scope="session")
def psu3_3() -> PermutationGroup:
    return fixture_group("psu3_3")
