// Registry helpers shared by the panels.

import type { PropertyDescriptorPayload, RegistryPayload } from "./types.js";

export function supportedDescriptors(
  registry: RegistryPayload,
  kind: string,
): PropertyDescriptorPayload[] {
  return registry.descriptors.filter(
    (descriptor) => registry.matrix[descriptor.name]?.[kind] === true,
  );
}
