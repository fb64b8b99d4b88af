from pydantic import BaseModel, Field
from typing import List

from qcartan.domain.fock import DecompositionMatrix
from qcartan.domain.partitions import Partition
from qcartan.domain.qpoly import QPoly

CACHE_VERSION = 1


class CachedEntry(BaseModel):
    row: List[int]
    poly: List[List[int]]


class CachedColumn(BaseModel):
    col: List[int]
    entries: List[CachedEntry]


class DecompositionDocument(BaseModel):
    version: int = CACHE_VERSION
    p: int = Field(..., ge=2)
    n: int = Field(..., ge=0)
    rows: List[List[int]]
    cols: List[List[int]]
    columns: List[CachedColumn]

    @classmethod
    def from_matrix(cls, matrix: DecompositionMatrix) -> "DecompositionDocument":
        return cls(
            p=matrix.p,
            n=matrix.n,
            rows=[lam.to_json() for lam in matrix.rows],
            cols=[mu.to_json() for mu in matrix.cols],
            columns=[
                CachedColumn(
                    col=mu.to_json(),
                    entries=[
                        CachedEntry(row=lam.to_json(), poly=entry.to_json())
                        for lam, entry in sorted(matrix.columns[mu].items(), key=lambda item: item[0].parts, reverse=True)
                    ]
                )
                for mu in matrix.cols
            ]
        )

    def to_matrix(self) -> DecompositionMatrix:
        columns = {
            Partition(tuple(column.col)): {
                Partition(tuple(entry.row)): QPoly.from_json(entry.poly) for entry in column.entries
            }
            for column in self.columns
        }
        return DecompositionMatrix(
            p=self.p,
            n=self.n,
            rows=[Partition(tuple(parts)) for parts in self.rows],
            cols=[Partition(tuple(parts)) for parts in self.cols],
            columns=columns
        )
