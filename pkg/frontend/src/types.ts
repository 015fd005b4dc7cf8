// Shapes of the engine's wire payloads: the document file JSON, the
// session state snapshot, and the property registry.

export interface RectPayload {
  x0: number;
  y0: number;
  width: number;
  height: number;
}

export interface EventPayload {
  trigger: string;
  handler: string;
}

export interface WidgetPayload {
  kind: string;
  name: string;
  container: string;
  rect: RectPayload;
  properties: Record<string, string | number | boolean>;
  events: EventPayload[];
}

export interface MenuItemPayload {
  label?: string;
  separator?: boolean;
}

export interface MenuButtonPayload {
  serial: number;
  title: string;
  width: number;
  items: MenuItemPayload[];
}

export interface MenuPayload {
  y0: number;
  buttons: MenuButtonPayload[];
  deleted: number[];
}

export interface WindowPayload {
  title: string;
  width: number;
  height: number;
  background: string;
  resizable_x: boolean;
  resizable_y: boolean;
}

export interface DocumentPayload {
  format_version: number;
  window: WindowPayload;
  widgets: WidgetPayload[];
  menu: MenuPayload | null;
  name_counters: Record<string, number>;
}

export interface EngineStatePayload {
  selection: string[];
  armed: string | null;
  grid: { enabled: boolean; size: number };
  locked: boolean;
}

export interface PropertyDescriptorPayload {
  name: string;
  type: "text" | "integer" | "color" | "enum" | "boolean";
  default: string | number | boolean;
  choices: string[];
}

export interface RegistryPayload {
  kinds: string[];
  descriptors: PropertyDescriptorPayload[];
  matrix: Record<string, Record<string, boolean>>;
  prototypes: Record<string, [number, number]>;
}

export interface ApplyError {
  error: string;
  index?: number;
  line?: number;
  applied?: number;
}
