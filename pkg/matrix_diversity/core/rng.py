from dataclasses import dataclass, field

import numpy as np

U64_MAX = 2**64 - 1


@dataclass(frozen=True)
class RngStream:
    """
    A reproducible random stream identified by (seed, stream).

    Streams are plain values: the generator is rebuilt from the seed sequence
    every time, so two holders of the same stream always see the same draws.
    Parallel workers take distinct children instead of sharing a generator.
    """

    seed: int
    stream: int = 0
    path: tuple[int, ...] = field(default=())

    def __post_init__(self):
        for value in (self.seed, self.stream, *self.path):
            if not 0 <= value <= U64_MAX:
                raise ValueError(f"RNG identifiers must be unsigned 64-bit: {value}")

    def seed_sequence(self) -> np.random.SeedSequence:
        return np.random.SeedSequence(self.seed, spawn_key=(self.stream, *self.path))

    def generator(self) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(self.seed_sequence()))

    def child(self, index: int) -> "RngStream":
        """
        >>> RngStream(7).child(3).child(1).path
        (3, 1)
        """
        return RngStream(self.seed, self.stream, (*self.path, index))
