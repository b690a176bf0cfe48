"""Small VGG-style convolutional network, written out by hand.

Three 3x3-conv + ReLU + 2x2-maxpool blocks over a 64x64 grayscale page
thumbnail, then two dense layers to a single spam probability. Forward
and backward passes are plain numpy (im2col convolutions); every layer's
gradient is finite-difference checked in the test suite. Training is
mini-batch SGD with He-uniform init, seeded shuffling and optional
shift/brightness augmentation, all driven by one RNG so runs reproduce
bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin

from .errors import NonFinite, ShapeMismatch
from .render import Raster, luminance

IMAGE_SIZE = 64


def _border_mode(values: np.ndarray) -> float:
    """Most frequent value along a 2D array's border (ties to the lowest)."""
    border = np.concatenate([values[0], values[-1], values[1:-1, 0],
                             values[1:-1, -1]])
    uniq, counts = np.unique(border, return_counts=True)
    return float(uniq[np.argmax(counts)])


def to_image_tensor(img: Raster) -> np.ndarray:
    """64x64 luminance thumbnail in [0, 1], aspect preserved.

    The page is padded to a square with its background luminance (modal
    border value), then area-averaged down. Padding goes right/bottom, so
    content stays anchored at the top-left like the rendered page.
    """
    lum = luminance(img.pixels) / 255.0
    h, w = lum.shape
    side = max(h, w, IMAGE_SIZE)
    block = -(-side // IMAGE_SIZE)  # ceil
    side = block * IMAGE_SIZE
    pad_value = _border_mode(lum)
    padded = np.full((side, side), pad_value, dtype=np.float64)
    padded[:h, :w] = lum
    tensor = padded.reshape(IMAGE_SIZE, block, IMAGE_SIZE, block).mean(axis=(1, 3))
    return np.clip(tensor, 0.0, 1.0)


def augment(x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Random +/-4 px translation (background padded) and 0.9..1.1 brightness."""
    dx = int(rng.integers(-4, 5))
    dy = int(rng.integers(-4, 5))
    scale = float(rng.uniform(0.9, 1.1))
    pad_value = _border_mode(x)
    out = np.full_like(x, pad_value)
    h, w = x.shape
    src_r0, src_r1 = max(0, -dy), min(h, h - dy)
    src_c0, src_c1 = max(0, -dx), min(w, w - dx)
    dst_r0, dst_c0 = max(0, dy), max(0, dx)
    out[dst_r0:dst_r0 + (src_r1 - src_r0),
        dst_c0:dst_c0 + (src_c1 - src_c0)] = x[src_r0:src_r1, src_c0:src_c1]
    return np.clip(out * scale, 0.0, 1.0)


class Conv3x3:
    """3x3 convolution, stride 1, zero padding 1 (shape preserving)."""

    def __init__(self, in_channels, out_channels):
        self.in_channels = in_channels
        self.out_channels = out_channels
        self.weights = np.zeros((out_channels, in_channels * 9))
        self.bias = np.zeros(out_channels)

    def init_params(self, rng):
        limit = np.sqrt(6.0 / (self.in_channels * 9))
        self.weights = rng.uniform(-limit, limit, size=self.weights.shape)
        self.bias = np.zeros(self.out_channels)

    def _im2col(self, x):
        n, c, h, w = x.shape
        padded = np.pad(x, ((0, 0), (0, 0), (1, 1), (1, 1)))
        cols = np.empty((n, c, 9, h, w), dtype=x.dtype)
        k = 0
        for dr in range(3):
            for dc in range(3):
                cols[:, :, k] = padded[:, :, dr:dr + h, dc:dc + w]
                k += 1
        return cols.reshape(n, c * 9, h * w)

    def forward(self, x):
        if x.shape[1] != self.in_channels:
            raise ShapeMismatch(
                f"conv expects {self.in_channels} channels, got {x.shape[1]}")
        n, _, h, w = x.shape
        cols = self._im2col(x)
        out = np.einsum("of,nfp->nop", self.weights, cols, optimize=True)
        out += self.bias[None, :, None]
        self._cache = (cols, x.shape)
        return out.reshape(n, self.out_channels, h, w)

    def backward(self, dout):
        cols, x_shape = self._cache
        n, c, h, w = x_shape
        dflat = dout.reshape(n, self.out_channels, h * w)
        self.grad_weights = np.einsum("nop,nfp->of", dflat, cols,
                                      optimize=True)
        self.grad_bias = dflat.sum(axis=(0, 2))
        dcols = np.einsum("of,nop->nfp", self.weights, dflat, optimize=True)
        dcols = dcols.reshape(n, c, 9, h, w)
        dpadded = np.zeros((n, c, h + 2, w + 2))
        k = 0
        for dr in range(3):
            for dc in range(3):
                dpadded[:, :, dr:dr + h, dc:dc + w] += dcols[:, :, k]
                k += 1
        return dpadded[:, :, 1:-1, 1:-1]

    @property
    def params(self):
        return [("weights", self.weights, (self.out_channels,
                                           self.in_channels * 9)),
                ("bias", self.bias, (self.out_channels,))]


class ReLU:
    def forward(self, x):
        self._mask = x > 0
        return x * self._mask

    def backward(self, dout):
        return dout * self._mask

    params = []


class MaxPool2:
    """2x2 max pooling, stride 2; ties route to the first window index."""

    def forward(self, x):
        n, c, h, w = x.shape
        if h % 2 or w % 2:
            raise ShapeMismatch("pooling needs even spatial dimensions")
        windows = x.reshape(n, c, h // 2, 2, w // 2, 2)
        windows = windows.transpose(0, 1, 2, 4, 3, 5).reshape(
            n, c, h // 2, w // 2, 4)
        self._argmax = windows.argmax(axis=-1)
        self._in_shape = x.shape
        return np.take_along_axis(windows, self._argmax[..., None],
                                  axis=-1)[..., 0]

    def backward(self, dout):
        n, c, h, w = self._in_shape
        dwindows = np.zeros((n, c, h // 2, w // 2, 4))
        np.put_along_axis(dwindows, self._argmax[..., None],
                          dout[..., None], axis=-1)
        dwindows = dwindows.reshape(n, c, h // 2, w // 2, 2, 2)
        return dwindows.transpose(0, 1, 2, 4, 3, 5).reshape(n, c, h, w)

    params = []


class Flatten:
    def forward(self, x):
        self._shape = x.shape
        return x.reshape(x.shape[0], -1)

    def backward(self, dout):
        return dout.reshape(self._shape)

    params = []


class Dense:
    def __init__(self, in_features, out_features):
        self.in_features = in_features
        self.out_features = out_features
        self.weights = np.zeros((out_features, in_features))
        self.bias = np.zeros(out_features)

    def init_params(self, rng):
        limit = np.sqrt(6.0 / self.in_features)
        self.weights = rng.uniform(-limit, limit, size=self.weights.shape)
        self.bias = np.zeros(self.out_features)

    def forward(self, x):
        if x.shape[1] != self.in_features:
            raise ShapeMismatch(
                f"dense expects {self.in_features} inputs, got {x.shape[1]}")
        self._x = x
        return x @ self.weights.T + self.bias

    def backward(self, dout):
        self.grad_weights = dout.T @ self._x
        self.grad_bias = dout.sum(axis=0)
        return dout @ self.weights

    @property
    def params(self):
        return [("weights", self.weights,
                 (self.out_features, self.in_features)),
                ("bias", self.bias, (self.out_features,))]


def default_arch(size: int = IMAGE_SIZE):
    """Conv8-Conv16-Conv32 blocks then Dense(64) and a single logit."""
    flat = 32 * (size // 8) * (size // 8)
    assert size == IMAGE_SIZE and flat == 2048, "arch is fixed to 64x64 input"
    return [
        Conv3x3(1, 8), ReLU(), MaxPool2(),
        Conv3x3(8, 16), ReLU(), MaxPool2(),
        Conv3x3(16, 32), ReLU(), MaxPool2(),
        Flatten(), Dense(flat, 64), ReLU(), Dense(64, 1),
    ]


@dataclass
class TrainHistory:
    loss: list[float] = field(default_factory=list)
    train_accuracy: list[float] = field(default_factory=list)
    val_accuracy: list[float] = field(default_factory=list)

    def __len__(self):
        return len(self.loss)


def _bce_from_logits(z, y):
    """Stable binary cross entropy and its dL/dz for labels in {0,1}."""
    loss = np.mean(np.log1p(np.exp(-np.abs(z))) + np.maximum(z, 0.0) - y * z)
    probs = np.empty_like(z)
    pos = z >= 0
    probs[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    probs[~pos] = ez / (1.0 + ez)
    return float(loss), probs


class ConvNetClassifier(BaseEstimator, ClassifierMixin):
    """From-scratch CNN with a fit/predict interface.

    ``fit`` expects X of shape (n, 64, 64) with values in [0, 1] and 0/1
    labels. Given the same seed and data, training reproduces identical
    weights; a divergent learning rate raises :class:`NonFinite`.
    """

    def __init__(self, learning_rate=0.05, epochs=10, batch_size=32, seed=0,
                 augment_data=True, layers=None):
        self.learning_rate = learning_rate
        self.epochs = epochs
        self.batch_size = batch_size
        self.seed = seed
        self.augment_data = augment_data
        self.layers = layers

    def _build(self, rng):
        self.layers_ = self.layers if self.layers is not None else default_arch()
        for layer in self.layers_:
            if hasattr(layer, "init_params"):
                layer.init_params(rng)

    def forward_logits(self, X):
        out = np.asarray(X, dtype=np.float64)
        if out.ndim == 3:
            out = out[:, None]
        for layer in self.layers_:
            out = layer.forward(out)
        return out[:, 0]

    def backward_from_logits(self, dz):
        dout = dz[:, None]
        for layer in reversed(self.layers_):
            dout = layer.backward(dout)
        return dout

    def fit(self, X, y, X_val=None, y_val=None):
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        rng = np.random.Generator(np.random.PCG64(self.seed))
        self._build(rng)
        self.history_ = TrainHistory()
        n = X.shape[0]
        batch = max(1, min(self.batch_size, n))
        for _ in range(self.epochs):
            order = rng.permutation(n)
            losses = []
            correct = 0
            for start in range(0, n, batch):
                take = order[start:start + batch]
                xb = X[take]
                if self.augment_data:
                    xb = np.stack([augment(img, rng) for img in xb])
                z = self.forward_logits(xb)
                loss, probs = _bce_from_logits(z, y[take])
                if not np.isfinite(loss):
                    raise NonFinite(
                        f"loss diverged at lr={self.learning_rate}")
                losses.append(loss * len(take))
                correct += int(((probs >= 0.5) == (y[take] >= 0.5)).sum())
                self.backward_from_logits((probs - y[take]) / len(take))
                self._sgd_step()
            self.history_.loss.append(sum(losses) / n)
            self.history_.train_accuracy.append(correct / n)
            if X_val is not None and len(X_val):
                acc = float(np.mean(self.predict(X_val) == np.asarray(y_val)))
                self.history_.val_accuracy.append(acc)
        if not np.all([np.isfinite(p).all() for _, p, _ in self.all_params()]):
            raise NonFinite("non-finite weights after training")
        return self

    def _sgd_step(self):
        for layer in self.layers_:
            if layer.params:
                layer.weights -= self.learning_rate * layer.grad_weights
                layer.bias -= self.learning_rate * layer.grad_bias

    def all_params(self):
        out = []
        for i, layer in enumerate(self.layers_):
            for name, arr, shape in layer.params:
                out.append((f"layer{i}_{name}", arr, shape))
        return out

    def predict_score(self, X, chunk=256):
        X = np.asarray(X, dtype=np.float64)
        scores = []
        for start in range(0, X.shape[0], chunk):
            z = self.forward_logits(X[start:start + chunk])
            scores.append(_bce_from_logits(z, np.zeros_like(z))[1])
        probs = np.concatenate(scores) if scores else np.zeros(0)
        return np.clip(probs, 1e-15, 1.0 - 1e-15)

    def predict(self, X):
        return (self.predict_score(X) >= 0.5).astype(np.int64)


def cnn_forward(model: ConvNetClassifier, x: np.ndarray) -> float:
    """Probability for a single image tensor."""
    if x.shape != (IMAGE_SIZE, IMAGE_SIZE):
        raise ShapeMismatch(f"expected {(IMAGE_SIZE, IMAGE_SIZE)}, "
                            f"got {x.shape}")
    return float(model.predict_score(x[None])[0])


def cnn_backward(model: ConvNetClassifier, x: np.ndarray, label: int):
    """Loss and per-parameter gradients for one sample."""
    z = model.forward_logits(np.asarray(x)[None])
    y = np.array([float(label)])
    loss, probs = _bce_from_logits(z, y)
    model.backward_from_logits(probs - y)
    grads = {}
    for i, layer in enumerate(model.layers_):
        if layer.params:
            grads[f"layer{i}_weights"] = layer.grad_weights.copy()
            grads[f"layer{i}_bias"] = layer.grad_bias.copy()
    return loss, grads


@dataclass
class HyperGrid:
    learning_rates: list[float]
    epoch_counts: list[int]
    val_accuracy: np.ndarray  # (n_lrs, n_epochs)
    diverged: np.ndarray  # bool, same shape

    def to_csv(self) -> str:
        lines = ["lr,epochs,val_accuracy,diverged"]
        for i, lr in enumerate(self.learning_rates):
            for j, ep in enumerate(self.epoch_counts):
                lines.append(f"{lr:g},{ep},{self.val_accuracy[i, j]:.4f},"
                             f"{int(self.diverged[i, j])}")
        return "\n".join(lines) + "\n"


def lr_epoch_grid(X_train, y_train, X_val, y_val, learning_rates,
                  epoch_counts, seed=0, batch_size=32,
                  augment_data=True) -> HyperGrid:
    """Train one model per (learning rate, epochs) cell; record val accuracy.

    Divergent cells (NonFinite) score 0 and carry a flag, keeping the grid
    complete.
    """
    if not learning_rates or not epoch_counts:
        raise ValueError("grid axes must be non-empty")
    shape = (len(learning_rates), len(epoch_counts))
    accuracy = np.zeros(shape)
    diverged = np.zeros(shape, dtype=bool)
    seeds = np.random.SeedSequence(seed).spawn(shape[0] * shape[1])
    for i, lr in enumerate(learning_rates):
        for j, epochs in enumerate(epoch_counts):
            cell_seed = int(seeds[i * shape[1] + j].generate_state(1)[0])
            model = ConvNetClassifier(
                learning_rate=lr, epochs=epochs, batch_size=batch_size,
                seed=cell_seed, augment_data=augment_data)
            try:
                model.fit(X_train, y_train)
                accuracy[i, j] = float(
                    np.mean(model.predict(X_val) == np.asarray(y_val)))
            except NonFinite:
                accuracy[i, j] = 0.0
                diverged[i, j] = True
    return HyperGrid(list(learning_rates), list(epoch_counts), accuracy,
                     diverged)
