# Config package initialization

