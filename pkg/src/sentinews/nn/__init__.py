"""Minimal dense-tensor neural stack with backpropagation through time."""

from .layers import (
    DenseLayer,
    DropoutLayer,
    EmbeddingLayer,
    LSTMLayer,
    SimpleRNNLayer,
    sigmoid,
)
from .losses import bce_loss, bce_loss_grad
from .optim import AdamState, adam_step, clip_gradients, global_norm
from .model import (
    ModelCheckpoint,
    NetworkConfig,
    TrainReport,
    build_network,
    classify,
    predict,
    train,
)
from .gradcheck import gradient_check

__all__ = [
    "DenseLayer", "DropoutLayer", "EmbeddingLayer", "LSTMLayer",
    "SimpleRNNLayer", "sigmoid", "bce_loss", "bce_loss_grad", "AdamState",
    "adam_step", "clip_gradients", "global_norm", "ModelCheckpoint",
    "NetworkConfig", "TrainReport", "build_network", "classify", "predict",
    "train", "gradient_check",
]
