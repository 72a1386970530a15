import os

import pytest

from extremal_k3.pipeline import classify_all

DATA_DIR = os.path.join(os.path.dirname(__file__), "..", "src",
                        "extremal_k3", "data")


def data_path(name):
    return os.path.abspath(os.path.join(DATA_DIR, name))


@pytest.fixture(scope="session")
def full_classification():
    """The complete classification over all 712 candidate root types.
    Computed once per session; used by the acceptance tests."""
    return classify_all(processes=os.cpu_count())
