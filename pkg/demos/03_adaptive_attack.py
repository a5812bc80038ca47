"""
Baseline attack versus the context-aware attack
===============================================

The baseline only fools the detector, so the auto-encoders see profiles that
clash with the rest of the scene.  The adaptive attack keeps fooling the
detector while steering the profiles back toward ones the bank reconstructs
well.  Both stay inside the same L_inf budget of 10 grey levels.
"""
from _toy import toy_world
from ctxlab.attack import GOALS, adc_attack, baseline_attack
from ctxlab.detector import propose_regions
from ctxlab.experiment import AttackSection
from ctxlab.pipeline import goal_for_scene

data, system, _ = toy_world()
cats = data.model.categories
cfg = AttackSection().attack_config()
print(f"threshold {system.bank.threshold:.5f}\n")

for scene in sorted(data.test, key=lambda s: s.scene_id)[:4]:
    props = propose_regions(scene.image, scene.objects)
    for kind in GOALS:
        goal = goal_for_scene(scene, kind, 0, cats, props)
        args = (scene.image, scene.objects, goal, system.detector, system.bank, cfg, cats, props, scene.scene_id)
        _, base = baseline_attack(*args)
        _, adc = adc_attack(*args)
        print(f"scene {scene.scene_id:>4} {kind:>17}  "
              f"baseline fooled={base.fooled!s:5} score={base.image_score:.4f} bypass={base.bypassed!s:5}  "
              f"adc fooled={adc.fooled!s:5} score={adc.image_score:.4f} bypass={adc.bypassed!s:5}  "
              f"L_inf={adc.linf:.1f}")
