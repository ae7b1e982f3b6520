import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator


class ArrayModel(BaseModel):
    """Frozen model whose numpy fields are private read-only copies."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @model_validator(mode="after")
    def _freeze_arrays(self):
        for name in type(self).model_fields:
            value = getattr(self, name)
            if isinstance(value, np.ndarray):
                frozen = np.array(value, copy=True)
                frozen.setflags(write=False)
                object.__setattr__(self, name, frozen)
        return self
