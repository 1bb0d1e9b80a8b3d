"""Convert the MUTAG ``.npz`` bundled with pyGPs into TUDataset text files.

The archive stores a sparse CSC adjacency over all 3371 nodes, a node to
graph map and 0/1 graph labels. Labels are written as -1/1 as in the
TUDataset release.

    python tools/convert_npz_mutag.py MUTAG.npz tests/data/MUTAG
"""

import sys
from pathlib import Path

import numpy as np
from scipy.sparse import csc_matrix


def main(src: str, dest: str) -> None:
    data = np.load(src)
    adj = csc_matrix(
        (data["adj_data"], data["adj_indice"], data["adj_indptr"]), shape=tuple(data["adj_shape"])
    ).tocoo()
    out = Path(dest)
    out.mkdir(parents=True, exist_ok=True)
    pairs = sorted(zip(adj.row.tolist(), adj.col.tolist()))
    (out / "MUTAG_A.txt").write_text("".join(f"{i + 1},{j + 1}\n" for i, j in pairs))
    graph_ind = data["graph_ind"].astype(int).ravel()
    (out / "MUTAG_graph_indicator.txt").write_text("".join(f"{g}\n" for g in graph_ind))
    labels = [1 if y == 1 else -1 for y in data["labels"].ravel()]
    (out / "MUTAG_graph_labels.txt").write_text("".join(f"{y}\n" for y in labels))


if __name__ == "__main__":
    main(*sys.argv[1:3])
