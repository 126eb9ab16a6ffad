# Models package initialization

