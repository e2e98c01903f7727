"""Train a small ternary LSTM with batch normalization on the first 200 KB
of the bundled Shakespeare text, then pack it and compare real-valued and
Q4.8 inference.

    python demos/tiny_char_lm.py [run_dir]

Takes a few minutes on one core.
"""

import sys
from pathlib import Path

from btrnn.data import build_char_corpus, data_dir, load_text, order0_entropy_bits
from btrnn.packed import PackedModel, evaluate_packed
from btrnn.train import Trainer, TrainingConfig

run_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/demo-tiny-char")
corpus = build_char_corpus(load_text(data_dir() / "shakespeare_1m.txt")[:200_000])
config = TrainingConfig(task="char-lm", d_h=[64], mode="ternary", use_bn=True,
                        learning_rate=0.002, batch_size=32, seq_len=50, epochs=2, seed=0)

trainer = Trainer(config, corpus)
trainer.fit(run_dir)
test = trainer.evaluate("test")
print(f"order-0 entropy {order0_entropy_bits(corpus.split('test')):.3f} BPC, "
      f"model {test['score']:.3f} BPC")

packed = PackedModel.from_model(trainer.model, "seeded", seed=config.eval_seed)
packed.save(run_dir / "model.btpk")
for precision in ("real", "q4.8"):
    m = evaluate_packed(packed, corpus, config, "test", precision)
    print(f"packed {precision:4s} inference {m['score']:.4f} BPC")
