import hypothesis.strategies as st

from indposet import dag_new


@st.composite
def small_dags(draw, max_n=6):
    """A labeled DAG; edges always point from the higher id to the lower,
    so acyclicity is built in and shrinking stays inside the space."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    labels = [str(v + 1) for v in range(n)]
    edges = []
    for h in range(n):
        for g in range(h + 1, n):
            if draw(st.booleans()):
                edges.append((labels[g], labels[h]))
    return dag_new(labels, edges)
