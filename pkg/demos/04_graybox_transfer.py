"""
Gray-box transfer
=================

The attacker knows the architecture but not the weights.  It trains its own
detector and bank on scenes the defender never saw, crafts against those, and
gets a single shot at the defender's system.
"""
from _toy import toy_world
from ctxlab.detector import propose_regions
from ctxlab.experiment import AttackSection
from ctxlab.pipeline import goal_for_scene
from ctxlab.transfer import SystemPair, graybox_attack

data, target, surrogate = toy_world(with_surrogate=True)
pair = SystemPair(surrogate, target)
print("dataset hashes", pair.provenance)
cats = data.model.categories
cfg = AttackSection().attack_config()

fooled = bypassed = 0
scenes = sorted(data.test, key=lambda s: s.scene_id)[:10]
for scene in scenes:
    props = propose_regions(scene.image, scene.objects)
    goal = goal_for_scene(scene, "hiding", 0, cats, props)
    _, out = graybox_attack(scene.image, scene.objects, goal, pair, cfg, cats, props, scene.scene_id)
    fooled += out.fooled
    bypassed += out.bypassed
print(f"hiding on the target: fooled {fooled}/{len(scenes)}, bypassed {bypassed}/{max(fooled, 1)} of the fooled")
